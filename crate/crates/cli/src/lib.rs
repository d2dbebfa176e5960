//! Library surface of the `rinvar` command-line tool: the problem-file
//! parser and the report structure. The binary in `main.rs` drives these;
//! integration tests reuse them to load the shipped fixture files.

pub mod problem;
pub mod report;
