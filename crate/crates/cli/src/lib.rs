//! Script runner, report rendering and the built-in reference corpus.

pub mod corpus;
pub mod random;
pub mod report;
pub mod script;
pub mod session;
