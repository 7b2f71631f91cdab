//! Library surface of the CLI crate: the `verify` pipeline, shared with the
//! binary and its integration tests.

pub mod verify;
