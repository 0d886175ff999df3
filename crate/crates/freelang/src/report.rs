//! Machine-readable reports comparing measured complexities against the
//! bound table.

use serde::Serialize;

use crate::bounds::{Bound, LangClass, OpKind};

/// Measured-versus-expected verdict. `AboveBoundAlert` against a
/// non-conjectural bound means a theorem was violated, which can only be an
/// implementation bug; the CLI exits with code 2 in that case.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    BelowBound,
    AboveBoundAlert,
}

impl Verdict {
    pub fn of(measured: u64, expected: u64) -> Verdict {
        match measured.cmp(&expected) {
            std::cmp::Ordering::Equal => Verdict::Match,
            std::cmp::Ordering::Less => Verdict::BelowBound,
            std::cmp::Ordering::Greater => Verdict::AboveBoundAlert,
        }
    }
}

/// The expected side of a comparison.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Expected {
    pub class: LangClass,
    pub operation: OpKind,
    pub value: u64,
    pub formula: &'static str,
    pub conjectural: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphabet_note: Option<String>,
}

impl Expected {
    pub fn from_bound(class: LangClass, operation: OpKind, b: Bound) -> Expected {
        Expected {
            class,
            operation,
            value: b.value,
            formula: b.formula,
            conjectural: b.conjectural,
            alphabet_note: b.alphabet_note,
        }
    }
}

/// One operation applied to one operand (pair), measured and judged.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexityReport {
    /// Operand names or file paths, left first.
    pub operands: Vec<String>,
    pub operation: String,
    /// Complexities of the operands, left first.
    pub operand_kappas: Vec<u64>,
    pub measured_kappa: u64,
    pub expected: Expected,
    pub verdict: Verdict,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub timing_ms: f64,
}

impl ComplexityReport {
    pub fn new(
        operands: Vec<String>,
        operation: String,
        operand_kappas: Vec<u64>,
        measured_kappa: u64,
        expected: Expected,
        timing_ms: f64,
    ) -> ComplexityReport {
        let verdict = Verdict::of(measured_kappa, expected.value);
        ComplexityReport {
            operands,
            operation,
            operand_kappas,
            measured_kappa,
            expected,
            verdict,
            timing_ms,
        }
    }

    /// True when this report should make the process exit loudly.
    pub fn is_alert(&self) -> bool {
        self.verdict == Verdict::AboveBoundAlert && !self.expected.conjectural
    }

    pub fn render_text(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Match => "match",
            Verdict::BelowBound => "below_bound",
            Verdict::AboveBoundAlert => "ABOVE_BOUND_ALERT",
        };
        let conj = if self.expected.conjectural {
            " (conjecture)"
        } else {
            ""
        };
        format!(
            "{} of {} [κ = {}]: measured {} vs {} = {}{} -> {}",
            self.operation,
            self.operands.join(", "),
            self.operand_kappas
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            self.measured_kappa,
            self.expected.formula,
            self.expected.value,
            conj,
            verdict
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::of(5, 5), Verdict::Match);
        assert_eq!(Verdict::of(4, 5), Verdict::BelowBound);
        assert_eq!(Verdict::of(6, 5), Verdict::AboveBoundAlert);
    }

    #[test]
    fn json_shape_is_stable() {
        let expected = Expected {
            class: LangClass::FactorFree,
            operation: OpKind::Union,
            value: 19,
            formula: "mn-(m+n)",
            conjectural: false,
            alphabet_note: None,
        };
        let r = ComplexityReport::new(
            vec!["left".into(), "right".into()],
            "union".into(),
            vec![5, 6],
            19,
            expected,
            0.25,
        );
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"verdict\":\"MATCH\""));
        assert!(json.contains("\"measured_kappa\":19"));
        assert!(!r.is_alert());
    }
}
