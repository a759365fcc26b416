//! Gentle algebras and their tiling models.

pub mod algebra;
pub mod arcs;
pub mod artheory;
pub mod dot;
pub mod fixtures;
pub mod format;
pub mod homs;
pub mod oracle;
pub mod strings;
pub mod surface;
