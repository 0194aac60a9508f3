/*! The generator identity tables and their exhaustive verification.

Composition of two generators is again expressible in at most two
generators; the table below lists every such relation, oriented the way the
rewriting normalizer applies them. Juxtaposition is function composition —
in `τ_j σ_i` the `σ_i` acts first — and levels are inferred, so a single
schema covers every valid level.

Two index conventions for the mixed relations circulate in the literature
in a variant form (`τ_j σ_i = σ_{i+1} τ_j` for `i > j`, and
`τ_j δ_i = δ_i τ_{j+1}` for `i < j`). Direct evaluation refutes both; see
[`DISPUTED_VARIANTS`]. [`verify_identities`] checks the canonical table and
the variants side by side, re-derives the correct index offsets by exhaustive
search, and reports which form holds. The normalizer only ever consults the
canonical table, so a corrupted table cannot pass the round-trip tests
against [`canonical_form`](super::canonical_form).
*/

use serde::Serialize;

use super::{GenKind, GenWord, Generator};

/// Which subscript variable a factor pattern binds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    I,
    J,
}

/// A generator pattern `kind_{var+offset}`.
#[derive(Debug, Clone, Copy)]
pub struct FactorPat {
    pub kind: GenKind,
    pub var: Var,
    pub offset: i8,
}

/// Right-hand side pattern of an identity: the empty word or two factors.
#[derive(Debug, Clone, Copy)]
pub enum RhsPattern {
    Unit,
    Pair(FactorPat, FactorPat),
}

/// An instantiated right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rhs {
    Unit,
    Pair(Generator, Generator),
}

/// One oriented identity case `outer ∘ inner = rhs` under an index guard.
#[derive(Clone, Copy)]
pub struct IdentityCase {
    pub family: &'static str,
    pub case: &'static str,
    /// Leftmost (applied last) factor of the redex.
    pub lhs_outer: (GenKind, Var),
    /// Rightmost (applied first) factor of the redex.
    pub lhs_inner: (GenKind, Var),
    pub guard: fn(usize, usize) -> bool,
    pub rhs: RhsPattern,
}

impl IdentityCase {
    /// Extracts `(i, j)` from a concrete factor pair according to the
    /// variable roles of this case.
    fn bind(&self, outer: Generator, inner: Generator) -> (usize, usize) {
        match self.lhs_outer.1 {
            Var::I => (outer.index, inner.index),
            Var::J => (inner.index, outer.index),
        }
    }

    fn matches(&self, outer: Generator, inner: Generator) -> bool {
        if outer.kind != self.lhs_outer.0 || inner.kind != self.lhs_inner.0 {
            return false;
        }
        let (i, j) = self.bind(outer, inner);
        (self.guard)(i, j)
    }

    /// Instantiates the right-hand side for a matching redex.
    ///
    /// Callers must have checked [`matches`](Self::matches); offsets in the
    /// canonical table never underflow under their guards.
    pub fn instantiate_rhs(&self, outer: Generator, inner: Generator) -> Rhs {
        let (i, j) = self.bind(outer, inner);
        match self.rhs {
            RhsPattern::Unit => Rhs::Unit,
            RhsPattern::Pair(a, b) => {
                let index = |p: FactorPat| {
                    let base = match p.var {
                        Var::I => i as i64,
                        Var::J => j as i64,
                    };
                    let idx = base + p.offset as i64;
                    debug_assert!(idx >= 0, "guarded offsets never underflow");
                    idx as usize
                };
                Rhs::Pair(
                    Generator { kind: a.kind, index: index(a) },
                    Generator { kind: b.kind, index: index(b) },
                )
            }
        }
    }

    /// Instantiated RHS allowing underflow, for checking disputed variants.
    fn try_instantiate_rhs(&self, outer: Generator, inner: Generator) -> Option<Rhs> {
        let (i, j) = self.bind(outer, inner);
        match self.rhs {
            RhsPattern::Unit => Some(Rhs::Unit),
            RhsPattern::Pair(a, b) => {
                let index = |p: FactorPat| -> Option<usize> {
                    let base = match p.var {
                        Var::I => i as i64,
                        Var::J => j as i64,
                    };
                    usize::try_from(base + p.offset as i64).ok()
                };
                Some(Rhs::Pair(
                    Generator { kind: a.kind, index: index(a)? },
                    Generator { kind: b.kind, index: index(b)? },
                ))
            }
        }
    }

    /// Human-readable schema, e.g. `τ_j∘σ_i = σ_{i-1}∘τ_j  (i>j)`.
    pub fn schema(&self) -> String {
        let letter = |k: GenKind| match k {
            GenKind::Delta => "δ",
            GenKind::Sigma => "σ",
            GenKind::Tau => "τ",
        };
        let var = |v: Var| match v {
            Var::I => "i",
            Var::J => "j",
        };
        let pat = |p: FactorPat| {
            let base = var(p.var);
            match p.offset {
                0 => format!("{}_{}", letter(p.kind), base),
                o if o > 0 => format!("{}_{{{}+{}}}", letter(p.kind), base, o),
                o => format!("{}_{{{}-{}}}", letter(p.kind), base, -o),
            }
        };
        let lhs = format!(
            "{}_{}∘{}_{}",
            letter(self.lhs_outer.0),
            var(self.lhs_outer.1),
            letter(self.lhs_inner.0),
            var(self.lhs_inner.1)
        );
        let rhs = match self.rhs {
            RhsPattern::Unit => "1".to_string(),
            RhsPattern::Pair(a, b) => format!("{}∘{}", pat(a), pat(b)),
        };
        format!("{lhs} = {rhs}  ({})", self.case)
    }

    /// Schema level of an instance with the given word domain: the inferred
    /// superscript of the inner (first-applied) factor.
    fn level_of_dom(&self, dom: usize) -> Option<usize> {
        match self.lhs_inner.0 {
            GenKind::Delta => Some(dom),
            GenKind::Sigma | GenKind::Tau => dom.checked_sub(1),
        }
    }

    fn dom_of_level(&self, level: usize) -> usize {
        match self.lhs_inner.0 {
            GenKind::Delta => level,
            GenKind::Sigma | GenKind::Tau => level + 1,
        }
    }
}

const D: GenKind = GenKind::Delta;
const S: GenKind = GenKind::Sigma;
const T: GenKind = GenKind::Tau;

const fn pat(kind: GenKind, var: Var, offset: i8) -> FactorPat {
    FactorPat { kind, var, offset }
}

/// The full oriented identity table. Every entry has been verified
/// exhaustively by [`verify_identities`]; the suite freezes the level-8 run.
pub const IDENTITY_TABLE: &[IdentityCase] = &[
    // δ_i ∘ δ_j = δ_{j+1} ∘ δ_i  (i ≤ j)
    IdentityCase {
        family: "delta-delta",
        case: "i<=j",
        lhs_outer: (D, Var::I),
        lhs_inner: (D, Var::J),
        guard: |i, j| i <= j,
        rhs: RhsPattern::Pair(pat(D, Var::J, 1), pat(D, Var::I, 0)),
    },
    // σ_j ∘ σ_i = σ_i ∘ σ_{j+1}  (i ≤ j)
    IdentityCase {
        family: "sigma-sigma",
        case: "i<=j",
        lhs_outer: (S, Var::J),
        lhs_inner: (S, Var::I),
        guard: |i, j| i <= j,
        rhs: RhsPattern::Pair(pat(S, Var::I, 0), pat(S, Var::J, 1)),
    },
    // τ_j ∘ τ_i = τ_i ∘ τ_{j+1}  (i ≤ j)
    IdentityCase {
        family: "tau-tau",
        case: "i<=j",
        lhs_outer: (T, Var::J),
        lhs_inner: (T, Var::I),
        guard: |i, j| i <= j,
        rhs: RhsPattern::Pair(pat(T, Var::I, 0), pat(T, Var::J, 1)),
    },
    // σ_j ∘ δ_i, four index cases.
    IdentityCase {
        family: "sigma-delta",
        case: "i<j",
        lhs_outer: (S, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i < j,
        rhs: RhsPattern::Pair(pat(D, Var::I, 0), pat(S, Var::J, -1)),
    },
    IdentityCase {
        family: "sigma-delta",
        case: "i=j",
        lhs_outer: (S, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i == j,
        rhs: RhsPattern::Unit,
    },
    IdentityCase {
        family: "sigma-delta",
        case: "i=j+1",
        lhs_outer: (S, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i == j + 1,
        rhs: RhsPattern::Unit,
    },
    IdentityCase {
        family: "sigma-delta",
        case: "i>j+1",
        lhs_outer: (S, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i > j + 1,
        rhs: RhsPattern::Pair(pat(D, Var::I, -1), pat(S, Var::J, 0)),
    },
    // τ_j ∘ σ_i, three index cases.
    IdentityCase {
        family: "tau-sigma",
        case: "i<j",
        lhs_outer: (T, Var::J),
        lhs_inner: (S, Var::I),
        guard: |i, j| i < j,
        rhs: RhsPattern::Pair(pat(S, Var::I, 0), pat(T, Var::J, 1)),
    },
    IdentityCase {
        family: "tau-sigma",
        case: "i=j",
        lhs_outer: (T, Var::J),
        lhs_inner: (S, Var::I),
        guard: |i, j| i == j,
        rhs: RhsPattern::Pair(pat(T, Var::J, 0), pat(T, Var::J, 1)),
    },
    // Machine-derived index: σ_{i-1}, not σ_{i+1}.
    IdentityCase {
        family: "tau-sigma",
        case: "i>j",
        lhs_outer: (T, Var::J),
        lhs_inner: (S, Var::I),
        guard: |i, j| i > j,
        rhs: RhsPattern::Pair(pat(S, Var::I, -1), pat(T, Var::J, 0)),
    },
    // τ_j ∘ δ_i, three index cases.
    // Machine-derived index: τ_{j-1}, not τ_{j+1}.
    IdentityCase {
        family: "tau-delta",
        case: "i<j",
        lhs_outer: (T, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i < j,
        rhs: RhsPattern::Pair(pat(D, Var::I, 0), pat(T, Var::J, -1)),
    },
    IdentityCase {
        family: "tau-delta",
        case: "i=j",
        lhs_outer: (T, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i == j,
        rhs: RhsPattern::Unit,
    },
    IdentityCase {
        family: "tau-delta",
        case: "i>j",
        lhs_outer: (T, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i > j,
        rhs: RhsPattern::Pair(pat(D, Var::I, -1), pat(T, Var::J, 0)),
    },
];

/// The two variant index conventions. Both fail; their counterexamples and
/// the machine-derived corrections are part of the identity report.
pub const DISPUTED_VARIANTS: &[IdentityCase] = &[
    IdentityCase {
        family: "tau-sigma",
        case: "i>j",
        lhs_outer: (T, Var::J),
        lhs_inner: (S, Var::I),
        guard: |i, j| i > j,
        rhs: RhsPattern::Pair(pat(S, Var::I, 1), pat(T, Var::J, 0)),
    },
    IdentityCase {
        family: "tau-delta",
        case: "i<j",
        lhs_outer: (T, Var::J),
        lhs_inner: (D, Var::I),
        guard: |i, j| i < j,
        rhs: RhsPattern::Pair(pat(D, Var::I, 0), pat(T, Var::J, 1)),
    },
];

/// Finds the identity case applying to an adjacent factor pair.
pub fn matching_case(outer: Generator, inner: Generator) -> Option<&'static IdentityCase> {
    IDENTITY_TABLE.iter().find(|case| case.matches(outer, inner))
}

/// A concrete instance on which the two sides of a schema disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCounterexample {
    pub level: usize,
    pub i: usize,
    pub j: usize,
    pub lhs_word: String,
    pub rhs_word: String,
    pub lhs_value: String,
    pub rhs_value: String,
}

/// Outcome of checking one identity case over all instances up to a level.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub case: String,
    pub schema: String,
    pub instances: usize,
    pub holds: bool,
    /// At most the first five counterexamples are kept.
    pub counterexamples: Vec<IdentityCounterexample>,
    pub counterexample_count: usize,
}

/// Like [`FamilyReport`], for a disputed variant, together with the index
/// offsets re-derived by exhaustive search and the schema they produce.
#[derive(Debug, Clone, Serialize)]
pub struct VariantReport {
    #[serde(flatten)]
    pub report: FamilyReport,
    pub derived_schema: String,
}

/// The full identity verification report.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    /// Largest schema level `n` instantiated (the superscript of the
    /// first-applied factor).
    pub max_level: usize,
    pub families: Vec<FamilyReport>,
    pub variants: Vec<VariantReport>,
}

impl IdentityReport {
    /// True when every canonical family holds without counterexamples.
    pub fn holds(&self) -> bool {
        self.families.iter().all(|f| f.holds)
    }

    pub fn total_instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }
}

fn rhs_to_word(rhs: Rhs, dom: usize) -> Option<GenWord> {
    match rhs {
        Rhs::Unit => Some(GenWord::identity(dom)),
        Rhs::Pair(a, b) => GenWord::new(dom, vec![a, b]).ok(),
    }
}

fn check_case(case: &IdentityCase, max_level: usize) -> FamilyReport {
    let mut instances = 0;
    let mut counterexamples = Vec::new();
    let mut counterexample_count = 0;
    for level in 0..=max_level {
        let dom = case.dom_of_level(level);
        debug_assert_eq!(case.level_of_dom(dom), Some(level));
        for outer_index in 0..=dom + 2 {
            for inner_index in 0..=dom + 2 {
                let outer = Generator { kind: case.lhs_outer.0, index: outer_index };
                let inner = Generator { kind: case.lhs_inner.0, index: inner_index };
                if !case.matches(outer, inner) {
                    continue;
                }
                let Ok(lhs) = GenWord::new(dom, vec![outer, inner]) else { continue };
                instances += 1;
                let rhs_word = case.try_instantiate_rhs(outer, inner).and_then(|rhs| rhs_to_word(rhs, dom));
                let (i, j) = case.bind(outer, inner);
                match rhs_word {
                    Some(rhs) if rhs.eval() == lhs.eval() => {}
                    other => {
                        counterexample_count += 1;
                        if counterexamples.len() < 5 {
                            counterexamples.push(IdentityCounterexample {
                                level,
                                i,
                                j,
                                lhs_word: lhs.to_string(),
                                rhs_word: other.as_ref().map_or("ill-typed".into(), |w| w.to_string()),
                                lhs_value: lhs.eval().to_string(),
                                rhs_value: other.as_ref().map_or("ill-typed".into(), |w| w.eval().to_string()),
                            });
                        }
                    }
                }
            }
        }
    }
    FamilyReport {
        family: case.family.to_string(),
        case: case.case.to_string(),
        schema: case.schema(),
        instances,
        holds: counterexample_count == 0,
        counterexamples,
        counterexample_count,
    }
}

/// Re-derives the index offsets of a two-factor RHS by exhaustive search:
/// the unique offsets making the schema hold on every instance.
fn derive_offsets(case: &IdentityCase, max_level: usize) -> Vec<IdentityCase> {
    let RhsPattern::Pair(a, b) = case.rhs else { return Vec::new() };
    let mut found = Vec::new();
    for oa in -2i8..=2 {
        for ob in -2i8..=2 {
            let candidate = IdentityCase {
                rhs: RhsPattern::Pair(
                    FactorPat { offset: oa, ..a },
                    FactorPat { offset: ob, ..b },
                ),
                ..*case
            };
            let report = check_case(&candidate, max_level);
            if report.holds && report.instances > 0 {
                found.push(candidate);
            }
        }
    }
    found
}

/// Checks every identity family (and the disputed variants) on every valid
/// index instance with schema level at most `max_level`.
pub fn verify_identities(max_level: usize) -> IdentityReport {
    let families = IDENTITY_TABLE.iter().map(|case| check_case(case, max_level)).collect();
    let variants = DISPUTED_VARIANTS
        .iter()
        .map(|case| {
            let report = check_case(case, max_level);
            let derived = derive_offsets(case, max_level);
            let derived_schema = match derived.as_slice() {
                [unique] => unique.schema(),
                [] => "no correction of this shape exists".to_string(),
                many => many.iter().map(|c| c.schema()).collect::<Vec<_>>().join(" | "),
            };
            VariantReport { report, derived_schema }
        })
        .collect();
    IdentityReport { max_level, families, variants }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_table_holds_at_level_eight() {
        let report = verify_identities(8);
        assert!(report.holds(), "counterexamples: {:#?}", report.families);
        // Frozen instance count: 165 + 84 + 240 + 120 + 204 + 285.
        assert_eq!(report.total_instances(), 1098);
    }

    #[test]
    fn disputed_variants_fail_with_witnesses() {
        let report = verify_identities(4);
        assert_eq!(report.variants.len(), 2);
        for variant in &report.variants {
            assert!(!variant.report.holds);
            assert!(!variant.report.counterexamples.is_empty());
        }
        // The τσ variant already fails at (i, j) = (1, 0): τ_0∘σ_1 on 3
        // equals σ_0∘τ_0, not σ_2∘τ_0.
        let ts = &report.variants[0].report;
        assert_eq!(ts.family, "tau-sigma");
        let w = ts.counterexamples.iter().find(|c| (c.i, c.j) == (1, 0)).unwrap();
        assert_eq!(w.lhs_word, "t0.s1 @3");
        assert_eq!(w.lhs_value, "3->1:[_,0,0]");
        // The τδ variant fails at (i, j) = (0, 1): the stated right side
        // does not even type.
        let td = &report.variants[1].report;
        assert_eq!(td.family, "tau-delta");
        let w = td.counterexamples.iter().find(|c| c.lhs_word == "t1.d0 @2").unwrap();
        assert_eq!((w.i, w.j), (0, 1));
        assert_eq!(w.lhs_value, "2->2:[_,1]");
        assert_eq!(w.rhs_word, "ill-typed");
    }

    #[test]
    fn machine_derivation_recovers_the_corrected_indices() {
        let report = verify_identities(6);
        assert_eq!(report.variants[0].derived_schema, "τ_j∘σ_i = σ_{i-1}∘τ_j  (i>j)");
        assert_eq!(report.variants[1].derived_schema, "τ_j∘δ_i = δ_i∘τ_{j-1}  (i<j)");
    }

    #[test]
    fn smallest_tau_tau_instance() {
        let report = verify_identities(1);
        let tt = report.families.iter().find(|f| f.family == "tau-tau").unwrap();
        assert_eq!(tt.instances, 1);
        assert!(tt.holds);
    }

    #[test]
    fn every_adjacent_pair_matches_at_most_one_case() {
        for outer_kind in [GenKind::Delta, GenKind::Sigma, GenKind::Tau] {
            for inner_kind in [GenKind::Delta, GenKind::Sigma, GenKind::Tau] {
                for i in 0..6 {
                    for j in 0..6 {
                        let outer = Generator { kind: outer_kind, index: i };
                        let inner = Generator { kind: inner_kind, index: j };
                        let n = IDENTITY_TABLE.iter().filter(|c| c.matches(outer, inner)).count();
                        assert!(n <= 1, "ambiguous match for {outer}.{inner}");
                    }
                }
            }
        }
    }
}
