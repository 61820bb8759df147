//! The `bwcolor` guide, one chapter per module, with every example run as a
//! doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs-and-profiles.md")]
pub mod graphs_and_profiles {}

#[doc = include_str!("../../../book/src/recognition.md")]
pub mod recognition {}

#[doc = include_str!("../../../book/src/solvers.md")]
pub mod solvers {}

#[doc = include_str!("../../../book/src/reduction.md")]
pub mod reduction {}

#[doc = include_str!("../../../book/src/generators.md")]
pub mod generators {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
