//! Claim-verification suites.
//!
//! Each suite checks one headline claim on an explicit parameter grid and
//! returns a [`CheckReport`] listing every point checked, every failure, and
//! the equality witnesses the claim predicts. A suite only returns `Err` for
//! unusable grid parameters; a refuted claim is a *passing* run of the suite
//! with a non-empty failure list.

mod formula_suites;
mod oracle_suites;
mod report;

pub use formula_suites::{check_dichotomy, check_existence, check_monotonicity,
    check_superadditivity, check_tau_minimality};
pub use oracle_suites::{check_barnette_truncations, check_formula_vs_oracle, check_small_cases};
pub use report::{CheckReport, Failure};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("unknown suite `{name}` (expected one of: {})", Suite::name_list())]
    UnknownSuite { name: String },
    #[error("suite `{suite}` requires d_max in {}, got {got}", range_text(.min, .max))]
    GridOutOfRange {
        suite: &'static str,
        got: i64,
        min: i64,
        max: Option<i64>,
    },
    #[error("suite `{suite}` has a fixed grid and takes no d_max")]
    NoGridParameter { suite: &'static str },
}

fn range_text(min: &i64, max: &Option<i64>) -> String {
    match max {
        Some(m) => format!("{min}..={m}"),
        None => format!("{min}.."),
    }
}

pub(crate) fn guard_d_max(
    suite: Suite,
    got: i64,
    min: i64,
    max: Option<i64>,
) -> Result<(), VerifierError> {
    if got < min || max.is_some_and(|m| got > m) {
        return Err(VerifierError::GridOutOfRange {
            suite: suite.name(),
            got,
            min,
            max,
        });
    }
    Ok(())
}

/// The available check suites.
///
/// `formula-vs-oracle`, `small-cases`, and `barnette-truncations` construct
/// polytopes and consult the brute-force kernel; the remaining suites run on
/// closed-form counts alone and support much larger grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    FormulaVsOracle,
    SmallCases,
    TauMinimality,
    Dichotomy,
    Monotonicity,
    Existence,
    BarnetteTruncations,
    Superadditivity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::FormulaVsOracle,
        Suite::SmallCases,
        Suite::TauMinimality,
        Suite::Dichotomy,
        Suite::Monotonicity,
        Suite::Existence,
        Suite::BarnetteTruncations,
        Suite::Superadditivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FormulaVsOracle => "formula-vs-oracle",
            Suite::SmallCases => "small-cases",
            Suite::TauMinimality => "tau-minimality",
            Suite::Dichotomy => "dichotomy",
            Suite::Monotonicity => "monotonicity",
            Suite::Existence => "existence",
            Suite::BarnetteTruncations => "barnette-truncations",
            Suite::Superadditivity => "superadditivity",
        }
    }

    fn name_list() -> String {
        Suite::ALL
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// The `d_max` used when none is given; `None` for suites with a fixed
    /// grid.
    pub fn default_d_max(self) -> Option<i64> {
        match self {
            Suite::FormulaVsOracle => Some(7),
            Suite::SmallCases => None,
            Suite::TauMinimality => Some(60),
            Suite::Dichotomy => Some(60),
            Suite::Monotonicity => Some(30),
            Suite::Existence => Some(200),
            Suite::BarnetteTruncations => Some(6),
            Suite::Superadditivity => Some(40),
        }
    }

    /// Run the suite, with `d_max` falling back to [`Suite::default_d_max`].
    pub fn run(self, d_max: Option<i64>) -> Result<CheckReport, VerifierError> {
        if self == Suite::SmallCases {
            if d_max.is_some() {
                return Err(VerifierError::NoGridParameter { suite: self.name() });
            }
            return check_small_cases();
        }
        let dm = d_max
            .or_else(|| self.default_d_max())
            .expect("every grid suite has a default d_max");
        match self {
            Suite::FormulaVsOracle => check_formula_vs_oracle(dm),
            Suite::TauMinimality => check_tau_minimality(dm, None),
            Suite::Dichotomy => check_dichotomy(dm),
            Suite::Monotonicity => check_monotonicity(dm),
            Suite::Existence => check_existence(dm),
            Suite::BarnetteTruncations => check_barnette_truncations(dm),
            Suite::Superadditivity => check_superadditivity(dm),
            Suite::SmallCases => unreachable!("handled above"),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == normalized)
            .ok_or_else(|| VerifierError::UnknownSuite {
                name: s.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            let parsed: Suite = suite.name().parse().expect("name parses back");
            assert_eq!(parsed, suite, "round trip for {suite}");
        }
    }

    #[test]
    fn suite_parse_accepts_underscores_and_case() {
        let parsed: Suite = "Formula_VS_Oracle".parse().unwrap();
        assert_eq!(parsed, Suite::FormulaVsOracle);
    }

    #[test]
    fn suite_parse_rejects_unknown_names() {
        let err = "no-such-suite".parse::<Suite>().unwrap_err();
        assert!(
            matches!(err, VerifierError::UnknownSuite { ref name } if name == "no-such-suite"),
            "unexpected error: {err}"
        );
        assert!(
            err.to_string().contains("barnette-truncations"),
            "the error lists the valid names: {err}"
        );
    }

    #[test]
    fn small_cases_rejects_grid_parameter() {
        let err = Suite::SmallCases.run(Some(5)).unwrap_err();
        assert!(matches!(err, VerifierError::NoGridParameter { .. }));
    }

    #[test]
    fn run_dispatches_with_explicit_d_max() {
        let report = Suite::Existence.run(Some(30)).unwrap();
        assert_eq!(report.claim_id, "existence");
        assert_eq!(report.points_checked, 30);
        assert!(report.passed());
    }

    #[test]
    fn grid_guard_bounds_are_reported() {
        let err = Suite::Existence.run(Some(10_000)).unwrap_err();
        let text = err.to_string();
        assert!(
            text.contains("1..=200") && text.contains("10000"),
            "guard message shows the range and the offending value: {text}"
        );
    }
}
