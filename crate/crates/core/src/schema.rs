//! Versioned JSON schemas (under construction)
