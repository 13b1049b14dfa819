# Clifford Subalgebras - Core modules
