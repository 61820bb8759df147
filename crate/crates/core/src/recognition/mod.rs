//! Class membership tests. Each recognizer returns the structural
//! certificate its solver consumes, or a witness against membership.

pub mod chordal;
pub mod cograph;
pub mod dh;
pub mod difference;
pub mod interval;
pub mod split;
pub mod strongly_chordal;
pub mod threshold;

use std::fmt;
use std::str::FromStr;

pub use cograph::{recognize_cograph, Cotree, CotreeBuilder, CotreeNode};
pub use dh::{recognize_dh, DhNode, DhTree, Inheritance, TwinOp};
pub use difference::{recognize_difference, DifferenceModel};
pub use interval::{recognize_interval, CliqueOrder, IntervalError};
pub use split::{recognize_split, SplitPartition};
pub use strongly_chordal::{recognize_strongly_chordal, SimpleOrder};
pub use threshold::{recognize_threshold, ThresholdOrdering};

use crate::graph::Graph;

/// What a [`Witness`] exhibits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forbidden {
    P4,
    C4,
    C5,
    TwoK2,
    Triangle,
    /// Induced cycle of length at least 5, in cycle order.
    Hole,
    /// The vertices induce a subgraph with no pendant, twin or isolated
    /// vertex.
    NoPruningStep,
    /// The vertices induce a subgraph with no simple vertex.
    NoSimpleVertex,
    /// A chordal component whose maximal cliques cannot be ordered
    /// consecutively.
    NoConsecutiveArrangement,
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Forbidden::P4 => "P4",
            Forbidden::C4 => "C4",
            Forbidden::C5 => "C5",
            Forbidden::TwoK2 => "2K2",
            Forbidden::Triangle => "K3",
            Forbidden::Hole => "hole",
            Forbidden::NoPruningStep => "no-pruning-step",
            Forbidden::NoSimpleVertex => "no-simple-vertex",
            Forbidden::NoConsecutiveArrangement => "no-consecutive-arrangement",
        };
        f.write_str(s)
    }
}

/// Vertices of the input graph exhibiting a [`Forbidden`] configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: Forbidden,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn new(kind: Forbidden, vertices: Vec<usize>) -> Self {
        Witness { kind, vertices }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on ", self.kind)?;
        let ids: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        f.write_str(&ids.join(","))
    }
}

/// The classes reported by [`classify`], in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Cograph,
    Threshold,
    Difference,
    DistanceHereditary,
    Interval,
    StronglyChordal,
    Split,
    Chordal,
}

impl GraphClass {
    pub const ALL: [GraphClass; 8] = [
        GraphClass::Cograph,
        GraphClass::Threshold,
        GraphClass::Difference,
        GraphClass::DistanceHereditary,
        GraphClass::Interval,
        GraphClass::StronglyChordal,
        GraphClass::Split,
        GraphClass::Chordal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cograph => "cograph",
            GraphClass::Threshold => "threshold",
            GraphClass::Difference => "difference",
            GraphClass::DistanceHereditary => "distance-hereditary",
            GraphClass::Interval => "interval",
            GraphClass::StronglyChordal => "strongly-chordal",
            GraphClass::Split => "split",
            GraphClass::Chordal => "chordal",
        }
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s || (s == "dh" && *c == GraphClass::DistanceHereditary))
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

/// Outcome of one recognizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember(Option<Witness>),
    /// The recognizer gave up (clique arrangement budget).
    Undetermined,
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub verdicts: Vec<(GraphClass, Verdict)>,
}

impl ClassReport {
    pub fn verdict(&self, class: GraphClass) -> &Verdict {
        &self.verdicts.iter().find(|(c, _)| *c == class).expect("every class is reported").1
    }

    pub fn is(&self, class: GraphClass) -> bool {
        self.verdict(class).is_member()
    }

    /// Class inclusions that every report must respect.
    pub fn hierarchy_consistent(&self) -> bool {
        use GraphClass::*;
        let implies = |a, b| !self.is(a) || self.is(b);
        implies(Threshold, Cograph)
            && implies(Threshold, Split)
            && implies(Interval, StronglyChordal)
            && implies(StronglyChordal, Chordal)
            && implies(Split, Chordal)
            && implies(Cograph, DistanceHereditary)
            && implies(Difference, DistanceHereditary)
    }
}

fn verdict<T>(r: Result<T, Witness>) -> Verdict {
    match r {
        Ok(_) => Verdict::Member,
        Err(w) => Verdict::NonMember(Some(w)),
    }
}

/// Runs every recognizer.
pub fn classify(g: &Graph) -> ClassReport {
    let interval = match recognize_interval(g) {
        Ok(_) => Verdict::Member,
        Err(IntervalError::NotInterval(w)) => Verdict::NonMember(Some(w)),
        Err(IntervalError::BudgetExceeded { .. }) => Verdict::Undetermined,
    };
    let chordal = match chordal::find_hole(g) {
        None => Verdict::Member,
        Some(hole) => {
            let kind = if hole.len() == 4 { Forbidden::C4 } else { Forbidden::Hole };
            Verdict::NonMember(Some(Witness::new(kind, hole)))
        }
    };
    let verdicts = vec![
        (GraphClass::Cograph, verdict(recognize_cograph(g))),
        (GraphClass::Threshold, verdict(recognize_threshold(g))),
        (GraphClass::Difference, verdict(recognize_difference(g))),
        (GraphClass::DistanceHereditary, verdict(recognize_dh(g))),
        (GraphClass::Interval, interval),
        (GraphClass::StronglyChordal, verdict(recognize_strongly_chordal(g))),
        (GraphClass::Split, verdict(recognize_split(g))),
        (GraphClass::Chordal, chordal),
    ];
    ClassReport { verdicts }
}
