# Tests for steinbraid
