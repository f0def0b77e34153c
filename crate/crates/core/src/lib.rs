//! Exact elimination engine and finite-field constructions for 3-uniform
//! hypergraphs without many Berge 3-paths between any pair of vertices.
//!
//! The crate is `no_std` (with `alloc`): every operation is a pure function
//! of its inputs. File formats, parallel drivers and the command line live in
//! the companion `berge-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod construction;
pub mod elimchain;
pub mod poly;
pub mod resultant;
pub mod verifier;
