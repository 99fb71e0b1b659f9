pub mod catalan;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod identities;
pub mod jfrac;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod ring;
pub mod riordan;
pub mod series;
pub mod suites;
