use std::fmt;

use serde::Serialize;

use super::{Involution, Outcome};
use crate::error::Result;
use crate::partition::{Bipartition, Partition};

/// What one map does to one element, with the image mapped back.
#[derive(Debug, Clone, Serialize)]
pub struct TraceReport {
    pub involution: Involution,
    pub input: Bipartition,
    pub kind: &'static str,
    pub rule: &'static str,
    pub image: Option<Bipartition>,
    pub companion: Option<Partition>,
    /// Whether the image maps back to the input; absent when unpaired.
    pub round_trip: Option<bool>,
}

pub fn trace(which: Involution, bp: &Bipartition) -> Result<TraceReport> {
    let out = which.apply(bp)?;
    let round_trip = match &out.outcome {
        Outcome::Paired(y) => Some(which.apply(y)?.outcome == Outcome::Paired(bp.clone())),
        _ => None,
    };
    Ok(TraceReport {
        involution: which,
        input: bp.clone(),
        kind: out.kind(),
        rule: out.rule.label(),
        image: out.image().cloned(),
        companion: out.companion().cloned(),
        round_trip,
    })
}

/// One line per element: input, rule, then the image or companion.
pub fn trace_line(which: Involution, bp: &Bipartition) -> Result<String> {
    let out = which.apply(bp)?;
    Ok(match &out.outcome {
        Outcome::Paired(y) => format!("{bp}  {}  -> {y}", out.rule),
        Outcome::Excluded { companion: Some(c) } | Outcome::Survivor { companion: c } => {
            format!("{bp}  {}  companion {c}", out.rule)
        }
        Outcome::Excluded { companion: None } => format!("{bp}  {}", out.rule),
    })
}

impl fmt::Display for TraceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.involution, self.input)?;
        writeln!(f, "  outcome: {}", self.kind)?;
        writeln!(f, "  case: {}", self.rule)?;
        if let Some(y) = &self.image {
            writeln!(f, "  image: {y}")?;
        }
        if let Some(c) = &self.companion {
            writeln!(f, "  companion: {c}")?;
        }
        if let Some(ok) = self.round_trip {
            writeln!(f, "  round trip: {}", if ok { "ok" } else { "FAILED" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(a: &str, b: &str) -> Bipartition {
        Bipartition::new(a.parse().unwrap(), b.parse().unwrap())
    }

    #[test]
    fn closing_pair_trace() {
        let t = trace(Involution::Psi, &bp("9,7,5,3,1", "16,15,8,6,2")).unwrap();
        assert_eq!((t.kind, t.rule), ("Paired", "Psi-III-a"));
        assert_eq!(t.image, Some(bp("7,5,3,1", "16,15,11,8,6")));
        assert_eq!(t.round_trip, Some(true));
    }

    #[test]
    fn lines() {
        assert_eq!(trace_line(Involution::Upsilon, &bp("3", "1")).unwrap(), "((3),(1))  Ups-V1  -> ((4),∅)");
        assert_eq!(
            trace_line(Involution::Phi, &bp("1", "5,1")).unwrap(),
            "((1),(5,1))  excluded-merge  companion (5,2)"
        );
        assert_eq!(trace_line(Involution::Psi, &bp("3,1", "")).unwrap(), "((3,1),∅)  excluded-staircase");
    }
}
