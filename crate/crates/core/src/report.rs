use std::fmt;

use serde::{Deserialize, Serialize};

use crate::density::partition_density;
use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

/// Which solver produced a [`SolveReport`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "dense3")]
    Dense3,
    #[serde(rename = "brooks")]
    Brooks,
    #[serde(rename = "cubic43")]
    Cubic43,
    #[serde(rename = "eptas/coloring")]
    EptasColoring,
    #[serde(rename = "eptas/exact")]
    EptasExact,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Dense3 => "dense3",
            Algorithm::Brooks => "brooks",
            Algorithm::Cubic43 => "cubic43",
            Algorithm::EptasColoring => "eptas/coloring",
            Algorithm::EptasExact => "eptas/exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = DgpError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" => Algorithm::Exact,
            "dense3" => Algorithm::Dense3,
            "brooks" => Algorithm::Brooks,
            "cubic43" => Algorithm::Cubic43,
            "eptas/coloring" => Algorithm::EptasColoring,
            "eptas/exact" => Algorithm::EptasExact,
            other => return Err(DgpError::Parse(format!("unknown algorithm {other:?}"))),
        })
    }
}

/// A partition together with its exact density and provenance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolveReport {
    pub partition: Partition,
    pub density: Rat,
    pub algorithm: Algorithm,
    pub upper_bound: Option<Rat>,
    pub optimal: bool,
}

impl SolveReport {
    /// The density is always recomputed from `partition`, never taken on
    /// trust from the solver.
    pub fn new(
        g: &Graph,
        partition: Partition,
        algorithm: Algorithm,
        upper_bound: Option<Rat>,
        optimal: bool,
    ) -> Result<Self> {
        let density = partition_density(g, &partition)?;
        if let Some(ub) = &upper_bound {
            if &density > ub {
                return Err(DgpError::Internal(format!(
                    "{algorithm}: density {density} exceeds its own upper bound {ub}"
                )));
            }
        }
        Ok(SolveReport {
            partition,
            density,
            algorithm,
            upper_bound,
            optimal,
        })
    }

    /// Recomputes the density against `g` and checks it matches.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let d = partition_density(g, &self.partition)?;
        if d != self.density {
            return Err(DgpError::Internal(format!(
                "reported density {} but partition has density {d}",
                self.density
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_recomputed() {
        let g = Graph::cycle(5).unwrap();
        let p = Partition::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        let r = SolveReport::new(&g, p, Algorithm::Exact, None, true).unwrap();
        assert_eq!(r.density, Rat::frac(7, 6));
        r.verify(&g).unwrap();
    }

    #[test]
    fn bound_violation_is_internal_error() {
        let g = Graph::complete(3);
        let r = SolveReport::new(
            &g,
            Partition::whole(3),
            Algorithm::Brooks,
            Some(Rat::frac(1, 2)),
            false,
        );
        assert!(matches!(r, Err(DgpError::Internal(_))));
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in [
            Algorithm::Exact,
            Algorithm::Dense3,
            Algorithm::Brooks,
            Algorithm::Cubic43,
            Algorithm::EptasColoring,
            Algorithm::EptasExact,
        ] {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
            let json = serde_json::to_string(&a).unwrap();
            assert_eq!(json, format!("\"{}\"", a.as_str()));
        }
    }
}
