"""Assessment engine managers."""
