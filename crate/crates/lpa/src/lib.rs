pub mod cli;
pub mod corpus;
pub mod format;
pub mod json;
pub mod parse;
