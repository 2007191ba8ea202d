//! Generators, exhaustive corpora and the experiment drivers.

pub mod rng;
pub mod enumerate;
pub mod experiment;
pub mod generate;
pub mod witness;
