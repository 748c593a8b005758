pub mod arith;
pub mod error;
pub mod poly;
pub mod syzygy;
pub mod invariants;
pub mod arrangements;
pub mod corpus;
pub mod cli;
