# Tests for early warnings application
