//! Parameterized witness families meeting the tight bounds.
//!
//! Each family builds one operand (or a pair) with prescribed quotient
//! complexities whose image under an operation reaches the stored bound
//! exactly. Construction verifies the complexities and the declared
//! freeness class before returning, so a successfully built
//! [`WitnessPair`] is already a checked object.
//!
//! Most families are written as regular expressions or explicit transition
//! tables. Two are obtained by exhaustive search, because only their
//! existence and parameters are published: the binary factor-free pair for
//! intersection/difference, and the binary core of the reversal witness
//! (`cKc` needs an inner binary `K` with `κ(K) = n-3` whose reversal has
//! complexity `2^(n-3)`).

use std::fmt;
use std::time::Instant;

use crate::alphabet::{Alphabet, Word};
use crate::bounds::{expected_bound, Bound, LangClass, OpKind};
use crate::dfa::{BoolOp, Dfa, PartialDfa};
use crate::enumeration;
use crate::error::{Error, Result};
use crate::freeness::{self, AdjoinMode, FreeClass};
use crate::report::{ComplexityReport, Expected};

/// The witness families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessFamily {
    /// `K = a(c*(a|b))^(m-3)`, `L = a(b*(a|c))^(n-3)` over `{a,b,c}`:
    /// factor-free operands tight for all four boolean operations.
    TernaryFactorBool { m: usize, n: usize },
    /// Binary factor-free pair tight for intersection and difference,
    /// reconstructed by exhaustive search.
    BinaryFactorInterDiff { m: usize, n: usize },
    /// `K = a((ba*)^(m-5)b|a)(b((ba*)^(m-5)b|a))*a`,
    /// `L = a(a|b)^(n-4)(b(a|b)^(n-4))*a`: binary bifix-free operands for
    /// union and symmetric difference.
    BinaryBifixUnion { m: usize, n: usize },
    /// `K = a(b*a)^(m-3)`, `L = (a|b)(ba*)^(n-4)b`: binary factor-free
    /// operands for union and symmetric difference (conjectured maximal).
    BinaryFactorUnion { m: usize, n: usize },
    /// Subword-free operands over `m+n-3` letters, built directly from
    /// quotient equations; tight for all four boolean operations.
    SubwordBool { m: usize, n: usize },
    /// `a^(m-2)` and `a^(n-2)` over `{a}`: unary subword-free operands for
    /// product.
    UnaryProduct { m: usize, n: usize },
    /// `a^(n-2)` over `{a,b}`: binary subword-free operand for star.
    BinaryStar { n: usize },
    /// Factor-free operand for reversal: `a` (n=3), `aa` (n=4), and `cKc`
    /// over `{a,b,c}` with a searched binary core for n ≥ 5.
    FactorReversal { n: usize },
    /// Subword-free operand for reversal over `2^(n-3)-1` letters, whose
    /// reversal is a union of two-letter words indexed by all non-empty
    /// subsets of `{1..n-3}`.
    SubwordReversal { n: usize },
}

impl WitnessFamily {
    pub fn name(self) -> &'static str {
        match self {
            WitnessFamily::TernaryFactorBool { .. } => "ternary-factor-bool",
            WitnessFamily::BinaryFactorInterDiff { .. } => "binary-factor-inter-diff",
            WitnessFamily::BinaryBifixUnion { .. } => "binary-bifix-union",
            WitnessFamily::BinaryFactorUnion { .. } => "binary-factor-union",
            WitnessFamily::SubwordBool { .. } => "subword-bool",
            WitnessFamily::UnaryProduct { .. } => "unary-product",
            WitnessFamily::BinaryStar { .. } => "binary-star",
            WitnessFamily::FactorReversal { .. } => "factor-reversal",
            WitnessFamily::SubwordReversal { .. } => "subword-reversal",
        }
    }

    /// Family names accepted on the command line.
    pub const NAMES: [&'static str; 9] = [
        "ternary-factor-bool",
        "binary-factor-inter-diff",
        "binary-bifix-union",
        "binary-factor-union",
        "subword-bool",
        "unary-product",
        "binary-star",
        "factor-reversal",
        "subword-reversal",
    ];

    /// Builds a family tag from a CLI name and parameters. Unary-operand
    /// families take only `n`.
    pub fn from_name(name: &str, m: Option<usize>, n: Option<usize>) -> Result<WitnessFamily> {
        let bad = |message: &str| Error::BadWitnessParams {
            family: name.to_string(),
            message: message.to_string(),
        };
        let pair = || -> Result<(usize, usize)> {
            Ok((
                m.ok_or_else(|| bad("missing parameter m"))?,
                n.ok_or_else(|| bad("missing parameter n"))?,
            ))
        };
        let single = || -> Result<usize> { n.ok_or_else(|| bad("missing parameter n")) };
        Ok(match name {
            "ternary-factor-bool" => {
                let (m, n) = pair()?;
                WitnessFamily::TernaryFactorBool { m, n }
            }
            "binary-factor-inter-diff" => {
                let (m, n) = pair()?;
                WitnessFamily::BinaryFactorInterDiff { m, n }
            }
            "binary-bifix-union" => {
                let (m, n) = pair()?;
                WitnessFamily::BinaryBifixUnion { m, n }
            }
            "binary-factor-union" => {
                let (m, n) = pair()?;
                WitnessFamily::BinaryFactorUnion { m, n }
            }
            "subword-bool" => {
                let (m, n) = pair()?;
                WitnessFamily::SubwordBool { m, n }
            }
            "unary-product" => {
                let (m, n) = pair()?;
                WitnessFamily::UnaryProduct { m, n }
            }
            "binary-star" => WitnessFamily::BinaryStar { n: single()? },
            "factor-reversal" => WitnessFamily::FactorReversal { n: single()? },
            "subword-reversal" => WitnessFamily::SubwordReversal { n: single()? },
            _ => return Err(bad("unknown family name")),
        })
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WitnessFamily::TernaryFactorBool { m, n }
            | WitnessFamily::BinaryFactorInterDiff { m, n }
            | WitnessFamily::BinaryBifixUnion { m, n }
            | WitnessFamily::BinaryFactorUnion { m, n }
            | WitnessFamily::SubwordBool { m, n }
            | WitnessFamily::UnaryProduct { m, n } => {
                write!(f, "{}(m={m}, n={n})", self.name())
            }
            WitnessFamily::BinaryStar { n }
            | WitnessFamily::FactorReversal { n }
            | WitnessFamily::SubwordReversal { n } => write!(f, "{}(n={n})", self.name()),
        }
    }
}

/// A built and verified witness: operands, their classification, and the
/// operations they are tight for.
#[derive(Clone, Debug)]
pub struct WitnessPair {
    pub family: WitnessFamily,
    pub left: Dfa,
    /// Absent for unary-operand families (star, reversal).
    pub right: Option<Dfa>,
    /// Classification of the left operand (the right operand is verified to
    /// satisfy the same required flags).
    pub declared: FreeClass,
    /// The bound class used for expectations.
    pub bound_class: LangClass,
    /// Operations with their expected complexities.
    pub expectations: Vec<(OpKind, Bound)>,
}

fn construction_err(family: WitnessFamily, message: String) -> Error {
    Error::WitnessConstruction {
        family: family.to_string(),
        message,
    }
}

fn params_err(family: WitnessFamily, message: &str) -> Error {
    Error::BadWitnessParams {
        family: family.to_string(),
        message: message.to_string(),
    }
}

fn check_kappa(family: WitnessFamily, side: &str, d: &Dfa, want: usize) -> Result<()> {
    let got = d.quotient_complexity();
    if got != want {
        return Err(construction_err(
            family,
            format!("{side} operand has complexity {got}, expected {want}"),
        ));
    }
    Ok(())
}

fn check_flag(
    family: WitnessFamily,
    side: &str,
    d: &Dfa,
    flag_name: &str,
    holds: impl Fn(&Dfa) -> bool,
) -> Result<()> {
    if !holds(d) {
        return Err(construction_err(
            family,
            format!("{side} operand is not {flag_name}"),
        ));
    }
    Ok(())
}

fn regex_dfa(family: WitnessFamily, text: &str, sigma: &Alphabet) -> Result<Dfa> {
    let re = crate::regex::parse_regex(text, sigma)
        .map_err(|e| construction_err(family, format!("bad witness expression {text:?}: {e}")))?;
    Ok(re.to_dfa(sigma))
}

fn unary_block(k: usize) -> Dfa {
    let w = Word::from_symbols(vec![0; k]);
    Dfa::from_words(Alphabet::unary(), [&w]).expect("unary word DFA")
}

/// Builds and verifies the operands for a family.
pub fn make_witness(family: WitnessFamily) -> Result<WitnessPair> {
    match family {
        WitnessFamily::TernaryFactorBool { m, n } => {
            if m < 4 || n < 4 {
                return Err(params_err(family, "requires m, n ≥ 4"));
            }
            let sigma = Alphabet::of_chars("abc").expect("ternary alphabet");
            let left = regex_dfa(family, &format!("a(c*(a|b))^{}", m - 3), &sigma)?;
            let right = regex_dfa(family, &format!("a(b*(a|c))^{}", n - 3), &sigma)?;
            finish_pair(
                family,
                left,
                Some(right),
                (m, n),
                "factor-free",
                freeness::is_factor_free,
                LangClass::FactorFree,
                &OpKind::BOOLEAN,
            )
        }
        WitnessFamily::BinaryFactorInterDiff { m, n } => {
            if m < 6 || n < 6 {
                return Err(params_err(family, "requires m, n ≥ 6"));
            }
            let inter = expected_bound(LangClass::FactorFree, OpKind::Intersection, m, n)?;
            let diff = expected_bound(LangClass::FactorFree, OpKind::Difference, m, n)?;
            let targets = [
                (BoolOp::Intersection, inter.value),
                (BoolOp::Difference, diff.value),
            ];
            let (left, right) = enumeration::find_pair_attaining(
                enumeration::FreenessKind::Factor,
                2,
                m,
                n,
                &targets,
            )?
            .ok_or_else(|| {
                construction_err(family, "no pair attains both bounds at this size".to_string())
            })?;
            finish_pair(
                family,
                left,
                Some(right),
                (m, n),
                "factor-free",
                freeness::is_factor_free,
                LangClass::FactorFree,
                &[OpKind::Intersection, OpKind::Difference],
            )
        }
        WitnessFamily::BinaryBifixUnion { m, n } => {
            if m < 6 || n < 6 {
                return Err(params_err(family, "requires m, n ≥ 6"));
            }
            let sigma = Alphabet::binary();
            let left = regex_dfa(
                family,
                &format!("a((ba*)^{p}b|a)(b((ba*)^{p}b|a))*a", p = m - 5),
                &sigma,
            )?;
            let right = regex_dfa(
                family,
                &format!("a(a|b)^{q}(b(a|b)^{q})*a", q = n - 4),
                &sigma,
            )?;
            finish_pair(
                family,
                left,
                Some(right),
                (m, n),
                "bifix-free",
                freeness::is_bifix_free,
                LangClass::BinaryBifixFree,
                &[OpKind::Union, OpKind::SymmetricDifference],
            )
        }
        WitnessFamily::BinaryFactorUnion { m, n } => {
            if m < 6 || n < 6 {
                return Err(params_err(family, "requires m, n ≥ 6"));
            }
            let sigma = Alphabet::binary();
            let left = regex_dfa(family, &format!("a(b*a)^{}", m - 3), &sigma)?;
            let right = regex_dfa(family, &format!("(a|b)(ba*)^{}b", n - 4), &sigma)?;
            finish_pair(
                family,
                left,
                Some(right),
                (m, n),
                "factor-free",
                freeness::is_factor_free,
                LangClass::BinaryFactorFree,
                &[OpKind::Union, OpKind::SymmetricDifference],
            )
        }
        WitnessFamily::SubwordBool { m, n } => {
            if m < 4 || n < 4 {
                return Err(params_err(family, "requires m, n ≥ 4"));
            }
            let (left, right) = subword_bool_pair(m, n);
            finish_pair(
                family,
                left,
                Some(right),
                (m, n),
                "subword-free",
                freeness::is_subword_free,
                LangClass::SubwordFree,
                &OpKind::BOOLEAN,
            )
        }
        WitnessFamily::UnaryProduct { m, n } => {
            if m < 2 || n < 2 {
                return Err(params_err(family, "requires m, n ≥ 2"));
            }
            finish_pair(
                family,
                unary_block(m - 2),
                Some(unary_block(n - 2)),
                (m, n),
                "subword-free",
                freeness::is_subword_free,
                LangClass::UnaryFree,
                &[OpKind::Product],
            )
        }
        WitnessFamily::BinaryStar { n } => {
            if n < 3 {
                return Err(params_err(family, "requires n ≥ 3"));
            }
            let w = Word::from_symbols(vec![0; n - 2]);
            let left = Dfa::from_words(Alphabet::binary(), [&w]).expect("binary word DFA");
            finish_pair(
                family,
                left,
                None,
                (n, n),
                "subword-free",
                freeness::is_subword_free,
                LangClass::SubwordFree,
                &[OpKind::Star],
            )
        }
        WitnessFamily::FactorReversal { n } => {
            if n < 3 {
                return Err(params_err(family, "requires n ≥ 3"));
            }
            let left = match n {
                3 => unary_block(1),
                4 => unary_block(2),
                _ => {
                    let core = enumeration::reversal_witness_search(2, n - 3)?.ok_or_else(|| {
                        construction_err(
                            family,
                            format!("no binary core with κ = {} maximal for reversal", n - 3),
                        )
                    })?;
                    freeness::adjoin(&core, AdjoinMode::Both, "c")?
                }
            };
            finish_pair(
                family,
                left,
                None,
                (n, n),
                "factor-free",
                freeness::is_factor_free,
                LangClass::FactorFree,
                &[OpKind::Reversal],
            )
        }
        WitnessFamily::SubwordReversal { n } => {
            if !(4..=10).contains(&n) {
                return Err(params_err(family, "requires 4 ≤ n ≤ 10"));
            }
            let left = subword_reversal_witness(n);
            finish_pair(
                family,
                left,
                None,
                (n, n),
                "subword-free",
                freeness::is_subword_free,
                LangClass::SubwordFree,
                &[OpKind::Reversal],
            )
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish_pair(
    family: WitnessFamily,
    left: Dfa,
    right: Option<Dfa>,
    kappas: (usize, usize),
    flag_name: &str,
    flag: impl Fn(&Dfa) -> bool,
    bound_class: LangClass,
    ops: &[OpKind],
) -> Result<WitnessPair> {
    let left = left.minimize();
    let right = right.map(|r| r.minimize());
    check_kappa(family, "left", &left, kappas.0)?;
    check_flag(family, "left", &left, flag_name, &flag)?;
    if let Some(r) = &right {
        check_kappa(family, "right", r, kappas.1)?;
        check_flag(family, "right", r, flag_name, &flag)?;
    }
    let declared = freeness::classify(&left);
    let expectations = ops
        .iter()
        .map(|&op| Ok((op, expected_bound(bound_class, op, kappas.0, kappas.1)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessPair {
        family,
        left,
        right,
        declared,
        bound_class,
        expectations,
    })
}

/// The subword-free boolean pair, constructed directly from quotient
/// equations as transition tables over the alphabet
/// `{a,b,c} ∪ {d_3..d_(m-1)} ∪ {e_3..e_(n-1)}`.
///
/// Reading the left operand `K` row by row (1-based states, state m-1 is
/// the `ε` quotient, state m the sink): the initial state moves to state 2
/// on `a`, `b`, and every `e`-letter, and to state i on `d_i`; middle state
/// i (2 ≤ i ≤ m-3) moves to i+1 on `a` and straight to the `ε` state on
/// `d_(i+1)`; state m-2 accepts one more letter from `{a,b} ∪ e-letters`.
/// `L` is the mirror image (b and c, d and e, m and n swapped). One-letter
/// members exist: `d_(m-1)` in K and `e_(n-1)` in L reach the `ε` state
/// directly, which is what forces the alphabet to grow with m and n.
fn subword_bool_pair(m: usize, n: usize) -> (Dfa, Dfa) {
    let mut names: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
    let d_base = names.len();
    for i in 3..m {
        names.push(format!("d{i}"));
    }
    let e_base = names.len();
    for j in 3..n {
        names.push(format!("e{j}"));
    }
    let sigma = Alphabet::new(names).expect("witness alphabet");
    let d_letter = |i: usize| d_base + (i - 3); // symbol of d_i, 3 ≤ i ≤ m-1
    let e_letter = |j: usize| e_base + (j - 3); // symbol of e_j, 3 ≤ j ≤ n-1

    // K over states 0..m-1 (0-based; final m-2, sink m-1)
    let left = {
        let mut p = PartialDfa::new(sigma.clone(), m, 0).expect("valid skeleton");
        let st = |i: usize| i - 1; // 1-based -> 0-based
        p.set_transition(st(1), 0, st(2)).unwrap();
        p.set_transition(st(1), 1, st(2)).unwrap();
        for j in 3..n {
            p.set_transition(st(1), e_letter(j), st(2)).unwrap();
        }
        for i in 3..m {
            p.set_transition(st(1), d_letter(i), st(i)).unwrap();
        }
        for i in 2..=m.saturating_sub(3) {
            p.set_transition(st(i), 0, st(i + 1)).unwrap();
            p.set_transition(st(i), d_letter(i + 1), st(m - 1)).unwrap();
        }
        p.set_transition(st(m - 2), 0, st(m - 1)).unwrap();
        p.set_transition(st(m - 2), 1, st(m - 1)).unwrap();
        for j in 3..n {
            p.set_transition(st(m - 2), e_letter(j), st(m - 1)).unwrap();
        }
        p.set_final(st(m - 1)).unwrap();
        p.complete().expect("complete K")
    };

    // L is symmetric: b <-> c, d <-> e, m <-> n
    let right = {
        let mut p = PartialDfa::new(sigma, n, 0).expect("valid skeleton");
        let st = |j: usize| j - 1;
        p.set_transition(st(1), 0, st(2)).unwrap();
        p.set_transition(st(1), 2, st(2)).unwrap();
        for i in 3..m {
            p.set_transition(st(1), d_letter(i), st(2)).unwrap();
        }
        for j in 3..n {
            p.set_transition(st(1), e_letter(j), st(j)).unwrap();
        }
        for j in 2..=n.saturating_sub(3) {
            p.set_transition(st(j), 0, st(j + 1)).unwrap();
            p.set_transition(st(j), e_letter(j + 1), st(n - 1)).unwrap();
        }
        p.set_transition(st(n - 2), 0, st(n - 1)).unwrap();
        p.set_transition(st(n - 2), 2, st(n - 1)).unwrap();
        for i in 3..m {
            p.set_transition(st(n - 2), d_letter(i), st(n - 1)).unwrap();
        }
        p.set_final(st(n - 1)).unwrap();
        p.complete().expect("complete L")
    };

    (left, right)
}

/// Sub-alphabets on which the subword-free pair stays tight for
/// intersection (`{a} ∪ d_3..d_(m-2) ∪ e_3..e_(n-2)`, size m+n-7) and
/// difference (the same plus `b`, size m+n-6).
pub fn subword_bool_reduced_alphabets(m: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let d_base = 3;
    let e_base = 3 + (m - 3);
    let mut inter = vec![0usize];
    let mut diff = vec![0usize, 1];
    for i in 3..m - 1 {
        inter.push(d_base + (i - 3));
        diff.push(d_base + (i - 3));
    }
    for j in 3..n - 1 {
        inter.push(e_base + (j - 3));
        diff.push(e_base + (j - 3));
    }
    (inter, diff)
}

/// Union of two-letter words `B_i a_i` over `ℓ = 2^(n-3)-1` letters, where
/// `B_i` is the i-th non-empty subset of `{a_1..a_(n-3)}` (subsets ordered
/// by cardinality, then lexicographically). Its reversal is the union of
/// the `a_i B_i` and has complexity `2^(n-3)+2`.
fn subword_reversal_witness(n: usize) -> Dfa {
    let base = n - 3;
    let ell = (1usize << base) - 1;
    let sigma =
        Alphabet::new((1..=ell).map(|i| format!("a{i}"))).expect("indexed letter alphabet");

    let mut subsets: Vec<Vec<usize>> = (1..=((1usize << base) - 1))
        .map(|mask| (1..=base).filter(|&j| mask >> (j - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // states: 0 = initial, 1..=base = residual after a_j, base+1 = ε, base+2 = sink
    let eps_state = base + 1;
    let mut p = PartialDfa::new(sigma, base + 3, 0).expect("valid skeleton");
    for j in 1..=base {
        p.set_transition(0, j - 1, j).unwrap();
    }
    for (idx, subset) in subsets.iter().enumerate() {
        let letter = idx; // a_(idx+1)
        for &j in subset {
            p.set_transition(j, letter, eps_state).unwrap();
        }
    }
    p.set_final(eps_state).unwrap();
    p.complete().expect("complete witness")
}

/// Applies each expected operation of the family and reports measured
/// versus expected complexity. The subword-free boolean family also checks
/// intersection and difference on their reduced alphabets.
pub fn verify_witness(family: WitnessFamily) -> Result<Vec<ComplexityReport>> {
    let pair = make_witness(family)?;
    let mut reports = Vec::new();
    let left_name = format!("{}:left", family.name());
    let right_name = format!("{}:right", family.name());

    for &(op, ref bound) in &pair.expectations {
        let start = Instant::now();
        let (measured, operands, kappas) = match (op, &pair.right) {
            (OpKind::Star, _) => (
                pair.left.star().quotient_complexity(),
                vec![left_name.clone()],
                vec![pair.left.state_count() as u64],
            ),
            (OpKind::Reversal, _) => (
                pair.left.reverse().quotient_complexity(),
                vec![left_name.clone()],
                vec![pair.left.state_count() as u64],
            ),
            (OpKind::Product, Some(right)) => (
                pair.left.product(right)?.quotient_complexity(),
                vec![left_name.clone(), right_name.clone()],
                vec![pair.left.state_count() as u64, right.state_count() as u64],
            ),
            (op, Some(right)) => {
                let bool_op = op.as_bool_op().expect("boolean expectation");
                (
                    pair.left.boolean_combine(right, bool_op)?.quotient_complexity(),
                    vec![left_name.clone(), right_name.clone()],
                    vec![pair.left.state_count() as u64, right.state_count() as u64],
                )
            }
            _ => {
                return Err(construction_err(
                    family,
                    format!("operation {op} needs a right operand"),
                ))
            }
        };
        let timing_ms = start.elapsed().as_secs_f64() * 1e3;
        reports.push(ComplexityReport::new(
            operands,
            op.name().to_string(),
            kappas,
            measured as u64,
            Expected::from_bound(pair.bound_class, op, bound.clone()),
            timing_ms,
        ));
    }

    if let WitnessFamily::SubwordBool { m, n } = family {
        let right = pair.right.as_ref().expect("boolean family has a pair");
        let (inter_keep, diff_keep) = subword_bool_reduced_alphabets(m, n);
        for (op, keep) in [
            (OpKind::Intersection, inter_keep),
            (OpKind::Difference, diff_keep),
        ] {
            let start = Instant::now();
            let k = pair.left.restrict_alphabet(&keep)?;
            let l = right.restrict_alphabet(&keep)?;
            let measured = k
                .boolean_combine(&l, op.as_bool_op().expect("boolean op"))?
                .quotient_complexity();
            let timing_ms = start.elapsed().as_secs_f64() * 1e3;
            let bound = expected_bound(LangClass::SubwordFree, op, m, n)?;
            reports.push(ComplexityReport::new(
                vec![left_name.clone(), right_name.clone()],
                format!("{} (reduced alphabet, {} letters)", op.name(), keep.len()),
                vec![k.state_count() as u64, l.state_count() as u64],
                measured as u64,
                Expected::from_bound(LangClass::SubwordFree, op, bound),
                timing_ms,
            ));
        }
    }

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn ternary_factor_bool_at_5_6() {
        let pair = make_witness(WitnessFamily::TernaryFactorBool { m: 5, n: 6 }).unwrap();
        assert_eq!(pair.left.state_count(), 5);
        assert_eq!(pair.right.as_ref().unwrap().state_count(), 6);
        let reports = verify_witness(WitnessFamily::TernaryFactorBool { m: 5, n: 6 }).unwrap();
        let by_op = |name: &str| {
            reports
                .iter()
                .find(|r| r.operation == name)
                .unwrap_or_else(|| panic!("missing {name}"))
        };
        assert_eq!(by_op("intersection").measured_kappa, 9);
        assert_eq!(by_op("difference").measured_kappa, 11);
        assert_eq!(by_op("union").measured_kappa, 19);
        assert_eq!(by_op("symmetric_difference").measured_kappa, 19);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Match));
    }

    #[test]
    fn subword_bool_alphabet_grows_with_parameters() {
        let pair = make_witness(WitnessFamily::SubwordBool { m: 5, n: 6 }).unwrap();
        assert_eq!(pair.left.alphabet().len(), 5 + 6 - 3);
        assert!(pair.declared.subword_free);
    }

    #[test]
    fn unary_product_and_binary_star() {
        for (m, n) in [(4, 5), (4, 4)] {
            let reports = verify_witness(WitnessFamily::UnaryProduct { m, n }).unwrap();
            assert_eq!(reports[0].measured_kappa as usize, m + n - 2);
            assert_eq!(reports[0].verdict, Verdict::Match);
        }
        let reports = verify_witness(WitnessFamily::BinaryStar { n: 7 }).unwrap();
        assert_eq!(reports[0].measured_kappa, 6);
        assert_eq!(reports[0].verdict, Verdict::Match);
    }

    #[test]
    fn subword_reversal_small_cases() {
        let pair = make_witness(WitnessFamily::SubwordReversal { n: 5 }).unwrap();
        assert_eq!(pair.left.alphabet().len(), 3);
        assert_eq!(pair.left.state_count(), 5);
        assert_eq!(pair.left.reverse().quotient_complexity(), 6);
    }

    #[test]
    fn family_names_round_trip() {
        for name in WitnessFamily::NAMES {
            let fam = WitnessFamily::from_name(name, Some(6), Some(6)).unwrap();
            assert_eq!(fam.name(), name);
        }
        assert!(WitnessFamily::from_name("nope", Some(4), Some(4)).is_err());
        assert!(WitnessFamily::from_name("binary-star", None, None).is_err());
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(matches!(
            make_witness(WitnessFamily::TernaryFactorBool { m: 3, n: 6 }),
            Err(Error::BadWitnessParams { .. })
        ));
        assert!(matches!(
            make_witness(WitnessFamily::BinaryBifixUnion { m: 5, n: 6 }),
            Err(Error::BadWitnessParams { .. })
        ));
    }
}
