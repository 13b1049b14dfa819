# Clifford Subalgebras - Utilities
