//! Possibilistic-logic knowledge bases and their fusion.
//!
//! A possibilistic base attaches a weight in `(0, 1]` to each propositional
//! formula, read as a lower bound on the necessity of that formula. This
//! crate provides the propositional layer ([`logic`]), the weighted layer
//! ([`possibilistic`]), a registry of combination operators on `[0, 1]`
//! ([`operators`]), syntactic and semantic base merging ([`fusion`]) and
//! checkers for the rational merging postulates ([`postulates`]).

pub mod config;
pub mod fusion;
pub mod logic;
pub mod operators;
pub mod possibilistic;
pub mod postulates;
pub mod weight;
