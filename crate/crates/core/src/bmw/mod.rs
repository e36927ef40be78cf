//! Exact arithmetic in `BMW_n(q, nu)`.

pub mod cache;
mod context;
mod element;
pub mod groebner;
mod json;
mod relations;
mod word;

pub use context::{defining_relations, Context, COMPLETION_CAP};
pub use element::Element;
pub use json::{element_from_json, element_to_json};
pub use relations::verify_relations;
pub use word::{deglex, Alphabet, Letter, Word};
