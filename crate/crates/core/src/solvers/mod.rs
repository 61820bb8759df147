//! Exact profile solvers per class and the dispatcher that picks one.

pub mod cograph;
pub mod dh;
pub mod difference;
pub mod interval;
pub mod threshold;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use cograph::{cograph_gamma, cograph_profile, CographTables, GammaTable};
pub use dh::{dh_profile, DhTable, DhTables};
pub use difference::{difference_certificate, difference_profile};
pub use interval::{interval_profile, IntervalTable};
pub use threshold::{threshold_certificate, threshold_decide, threshold_profile};

use crate::graph::{BWProfile, Coloring, Graph};
use crate::oracle::{brute_profile, oracle_certificate, OracleError, DEFAULT_CAP};
use crate::recognition::dh::DhViolation;
use crate::recognition::{
    recognize_cograph, recognize_dh, recognize_difference, recognize_interval, recognize_threshold, DifferenceModel,
    ThresholdOrdering,
};

/// Solver families, in dispatch order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Threshold,
    Difference,
    Cograph,
    Interval,
    DistanceHereditary,
    Oracle,
}

impl Route {
    pub const ALL: [Route; 6] =
        [Route::Threshold, Route::Difference, Route::Cograph, Route::Interval, Route::DistanceHereditary, Route::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Route::Threshold => "threshold",
            Route::Difference => "difference",
            Route::Cograph => "cograph",
            Route::Interval => "interval",
            Route::DistanceHereditary => "distance-hereditary",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s || (s == "dh" && *r == Route::DistanceHereditary))
            .ok_or_else(|| SolveError::UnknownRoute(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("unknown solver `{0}`")]
    UnknownRoute(String),
    #[error("graph is not accepted by the {0} recognizer")]
    NotInClass(Route),
    #[error("no polynomial solver applies and the graph has {n} vertices, above the oracle cap of {cap}")]
    Unsupported { n: usize, cap: usize },
    #[error("decomposition tree is inconsistent: {0}")]
    BrokenTree(#[from] DhViolation),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A graph together with the structure one solver needs.
#[derive(Debug, Clone)]
pub enum Prepared {
    Threshold(ThresholdOrdering),
    Difference(DifferenceModel),
    Cograph(CographTables),
    Interval(IntervalTable),
    DistanceHereditary(DhTables),
    Oracle(Graph),
}

impl Prepared {
    /// Builds the structure for `route`, failing if `g` is not in its class.
    pub fn for_route(g: &Graph, route: Route) -> Result<Self, SolveError> {
        let miss = |_| SolveError::NotInClass(route);
        Ok(match route {
            Route::Threshold => Prepared::Threshold(recognize_threshold(g).map_err(miss)?),
            Route::Difference => Prepared::Difference(recognize_difference(g).map_err(miss)?),
            Route::Cograph => Prepared::Cograph(CographTables::new(&recognize_cograph(g).map_err(miss)?)),
            Route::Interval => {
                let order = recognize_interval(g).map_err(|_| SolveError::NotInClass(route))?;
                Prepared::Interval(IntervalTable::new(&order))
            }
            Route::DistanceHereditary => Prepared::DistanceHereditary(DhTables::new(&recognize_dh(g).map_err(miss)?)?),
            Route::Oracle => {
                if g.n() > DEFAULT_CAP {
                    return Err(SolveError::Unsupported { n: g.n(), cap: DEFAULT_CAP });
                }
                Prepared::Oracle(g.clone())
            }
        })
    }

    /// First route in dispatch order that accepts `g`.
    pub fn dispatch(g: &Graph) -> Result<Self, SolveError> {
        for route in Route::ALL {
            match Prepared::for_route(g, route) {
                Err(SolveError::NotInClass(_)) => continue,
                other => return other,
            }
        }
        unreachable!("the oracle route never reports class mismatch")
    }

    pub fn route(&self) -> Route {
        match self {
            Prepared::Threshold(_) => Route::Threshold,
            Prepared::Difference(_) => Route::Difference,
            Prepared::Cograph(_) => Route::Cograph,
            Prepared::Interval(_) => Route::Interval,
            Prepared::DistanceHereditary(_) => Route::DistanceHereditary,
            Prepared::Oracle(_) => Route::Oracle,
        }
    }

    pub fn profile(&self) -> BWProfile {
        match self {
            Prepared::Threshold(o) => threshold_profile(o),
            Prepared::Difference(m) => difference_profile(m),
            Prepared::Cograph(t) => t.profile(),
            Prepared::Interval(t) => t.profile(),
            Prepared::DistanceHereditary(t) => t.profile(),
            Prepared::Oracle(g) => brute_profile(g, DEFAULT_CAP).expect("size checked on preparation"),
        }
    }

    pub fn decide(&self, b: usize, w: usize) -> bool {
        match self {
            Prepared::Threshold(o) => threshold_decide(o, b, w),
            _ => self.profile().admits(b, w),
        }
    }

    /// A coloring with exactly `b` black and `w` white, or `None` if there is
    /// none.
    pub fn certificate(&self, b: usize, w: usize) -> Option<Coloring> {
        match self {
            Prepared::Threshold(o) => threshold_certificate(o, b, w),
            Prepared::Difference(m) => difference_certificate(m, b, w),
            Prepared::Cograph(t) => t.certificate(b, w),
            Prepared::Interval(t) => t.certificate(b, w),
            Prepared::DistanceHereditary(t) => t.certificate(b, w),
            Prepared::Oracle(g) => oracle_certificate(g, b, w, DEFAULT_CAP).expect("size checked on preparation"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub feasible: bool,
    pub certificate: Option<Coloring>,
    pub route: Route,
}

/// Decides `(b, w)` on the first applicable route and attaches a
/// certificate when feasible.
pub fn solve(g: &Graph, b: usize, w: usize) -> Result<SolveOutcome, SolveError> {
    let prepared = Prepared::dispatch(g)?;
    let certificate = prepared.certificate(b, w);
    Ok(SolveOutcome { feasible: certificate.is_some(), certificate, route: prepared.route() })
}

/// Profile from the first applicable route.
pub fn profile(g: &Graph) -> Result<(Route, BWProfile), SolveError> {
    let prepared = Prepared::dispatch(g)?;
    Ok((prepared.route(), prepared.profile()))
}

/// Certificate through the named solver (`threshold`, `difference`,
/// `cograph`, `interval`, `distance-hereditary` or `dh`, `oracle`).
pub fn extract_certificate(g: &Graph, b: usize, w: usize, via: &str) -> Result<Option<Coloring>, SolveError> {
    let route: Route = via.parse()?;
    Ok(Prepared::for_route(g, route)?.certificate(b, w))
}
