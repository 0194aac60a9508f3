/*! Words in the generators `δ`, `σ`, `τ` and their normal forms.

A [`GenWord`] is a sequence of generator symbols together with a domain
annotation. Factors are kept in function-composition order: the *last*
factor of the sequence is applied first, matching the usual juxtaposition
`δ₁σ₀τ₀`. Superscript levels are never stored; they are inferred by typing
the word from its domain.

Every partial monotone map factors uniquely as

```text
δ_{i_r} … δ_{i_1} · σ_{j_1} … σ_{j_s} · τ_{k_1} … τ_{k_t}
```

with each index list strictly increasing and `cod - dom = r - s - t`.
[`canonical_form`] reads this factorization directly off the map's table;
[`normalize`] reaches the same word by oriented rewriting with the identity
tables in [`identities`], one rule application at a time. The two routes are
checked against each other exhaustively in the test suite.

The textual grammar is

```text
word   := (factor ('.' factor)*)? '@' nat
factor := ('d' | 's' | 't') nat
```

so `"d1.s0.t0 @3"` is the word `δ₁σ₀τ₀` with domain `3`, and `"@3"` is the
identity on `3`.
*/

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ordinals::{HomFlavor, PMap};

pub mod identities;

use identities::Rhs;

/// Generator symbol kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// `δ` — injection missing one value.
    Delta,
    /// `σ` — surjection taking one value twice.
    Sigma,
    /// `τ` — surjection undefined at one position.
    Tau,
}

impl GenKind {
    fn letter(self) -> char {
        match self {
            GenKind::Delta => 'd',
            GenKind::Sigma => 's',
            GenKind::Tau => 't',
        }
    }
}

/// One generator symbol with its subscript. The superscript level is
/// inferred from context when the word is typed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn delta(index: usize) -> Generator {
        Generator { kind: GenKind::Delta, index }
    }

    pub fn sigma(index: usize) -> Generator {
        Generator { kind: GenKind::Sigma, index }
    }

    pub fn tau(index: usize) -> Generator {
        Generator { kind: GenKind::Tau, index }
    }

    /// Size after applying this generator to an ordinal of size `size`,
    /// or `None` when the inferred level is out of range.
    fn apply_level(&self, size: usize) -> Option<usize> {
        match self.kind {
            GenKind::Delta => (self.index <= size).then(|| size + 1),
            GenKind::Sigma => (size >= 2 && self.index < size - 1).then(|| size - 1),
            GenKind::Tau => (size >= 1 && self.index <= size - 1).then(|| size - 1),
        }
    }

    /// The generator as a concrete map out of an ordinal of size `size`.
    fn to_pmap(self, size: usize) -> PMap {
        match self.kind {
            GenKind::Delta => PMap::delta(size, self.index).expect("typed delta factor"),
            GenKind::Sigma => PMap::sigma(size - 1, self.index).expect("typed sigma factor"),
            GenKind::Tau => PMap::tau(size - 1, self.index).expect("typed tau factor"),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

/// Errors from parsing, typing, or normalizing words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("ill-typed word: factor {factor} at position {position} does not type at intermediate size {size}")]
    IllTyped { position: usize, size: usize, factor: Generator },
    #[error("rewriting exceeded the step budget of {budget}")]
    NonTermination { budget: usize },
}

/// A well-typed word in the generators, annotated with its domain.
///
/// `factors[0]` is applied *last*; the empty factor sequence is the
/// identity on `domain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord {
    domain: usize,
    codomain: usize,
    factors: Vec<Generator>,
}

impl GenWord {
    /// Typechecks the factor sequence against the domain annotation.
    pub fn new(domain: usize, factors: Vec<Generator>) -> Result<GenWord, WordError> {
        let mut size = domain;
        for (position, factor) in factors.iter().enumerate().rev() {
            size = factor
                .apply_level(size)
                .ok_or(WordError::IllTyped { position, size, factor: *factor })?;
        }
        Ok(GenWord { domain, codomain: size, factors })
    }

    pub fn identity(domain: usize) -> GenWord {
        GenWord { domain, codomain: domain, factors: Vec::new() }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Intermediate ordinal sizes, from the domain (rightmost) to the
    /// codomain (leftmost); has `len() + 1` entries.
    pub fn levels(&self) -> Vec<usize> {
        let mut sizes = Vec::with_capacity(self.factors.len() + 1);
        let mut size = self.domain;
        sizes.push(size);
        for factor in self.factors.iter().rev() {
            size = factor.apply_level(size).expect("word is well-typed");
            sizes.push(size);
        }
        sizes.reverse();
        sizes
    }

    /// Evaluates the word to the composite partial map.
    pub fn eval(&self) -> PMap {
        let mut acc = PMap::identity(self.domain);
        for factor in self.factors.iter().rev() {
            let step = factor.to_pmap(acc.cod());
            acc = step.compose(&acc).expect("factor shapes line up");
        }
        acc
    }

    /// True when every factor already lies in the total fragment.
    pub fn is_delta_word(&self) -> bool {
        self.factors.iter().all(|g| g.kind != GenKind::Tau)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{factor}")?;
        }
        if self.factors.is_empty() {
            write!(f, "@{}", self.domain)
        } else {
            write!(f, " @{}", self.domain)
        }
    }
}

impl FromStr for GenWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let at = s
            .rfind('@')
            .ok_or_else(|| WordError::Syntax("missing `@domain` annotation".into()))?;
        let domain: usize = s[at + 1..]
            .trim()
            .parse()
            .map_err(|_| WordError::Syntax(format!("bad domain `{}`", &s[at + 1..])))?;
        let head = s[..at].trim();
        let mut factors = Vec::new();
        if !head.is_empty() {
            for token in head.split('.') {
                let token = token.trim();
                let mut chars = token.chars();
                let kind = match chars.next() {
                    Some('d') => GenKind::Delta,
                    Some('s') => GenKind::Sigma,
                    Some('t') => GenKind::Tau,
                    _ => return Err(WordError::Syntax(format!("bad factor `{token}`"))),
                };
                let index: usize = chars
                    .as_str()
                    .parse()
                    .map_err(|_| WordError::Syntax(format!("bad factor index in `{token}`")))?;
                factors.push(Generator { kind, index });
            }
        }
        GenWord::new(domain, factors)
    }
}

/// A word in canonical `δ…δ σ…σ τ…τ` shape, together with its three index
/// lists (each strictly increasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalWord {
    word: GenWord,
    deltas: Vec<usize>,
    sigmas: Vec<usize>,
    taus: Vec<usize>,
}

impl CanonicalWord {
    /// Assembles and validates a canonical word from its index lists.
    ///
    /// Checks the factor ordering, strict monotonicity of each list, the
    /// arithmetic `cod - dom = r - s - t`, and the one-sided refinements:
    /// the word evaluates into the downward-closed flavor iff the `τ` list
    /// is a consecutive block ending at `dom - 1`, and dually for the
    /// upward-closed flavor with a block starting at `0`.
    pub fn from_parts(
        domain: usize,
        deltas: Vec<usize>,
        sigmas: Vec<usize>,
        taus: Vec<usize>,
    ) -> Result<CanonicalWord, WordError> {
        for list in [&deltas, &sigmas, &taus] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(WordError::Syntax("canonical index lists must be strictly increasing".into()));
            }
        }
        let mut factors = Vec::with_capacity(deltas.len() + sigmas.len() + taus.len());
        factors.extend(deltas.iter().rev().map(|&i| Generator::delta(i)));
        factors.extend(sigmas.iter().map(|&j| Generator::sigma(j)));
        factors.extend(taus.iter().map(|&k| Generator::tau(k)));
        let word = GenWord::new(domain, factors)?;

        let (r, s, t) = (deltas.len() as i64, sigmas.len() as i64, taus.len() as i64);
        debug_assert_eq!(word.codomain() as i64 - domain as i64, r - s - t);

        let value = word.eval();
        debug_assert_eq!(value.undefined_positions(), taus);
        let suffix = is_consecutive(&taus) && taus.last().map_or(true, |&k| k + 1 == domain);
        let prefix = is_consecutive(&taus) && taus.first().map_or(true, |&k| k == 0);
        if value.in_flavor(HomFlavor::PiL) != suffix || value.in_flavor(HomFlavor::PiR) != prefix {
            return Err(WordError::Syntax("τ index list contradicts one-sided membership".into()));
        }
        Ok(CanonicalWord { word, deltas, sigmas, taus })
    }

    pub fn word(&self) -> &GenWord {
        &self.word
    }

    pub fn into_word(self) -> GenWord {
        self.word
    }

    /// The strictly increasing `δ` index list (the values missed).
    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    /// The strictly increasing `σ` index list (the collapsed positions).
    pub fn sigmas(&self) -> &[usize] {
        &self.sigmas
    }

    /// The strictly increasing `τ` index list (the undefined positions).
    pub fn taus(&self) -> &[usize] {
        &self.taus
    }

    pub fn eval(&self) -> PMap {
        self.word.eval()
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

fn is_consecutive(list: &[usize]) -> bool {
    list.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Reads the canonical factorization directly off the map's table.
///
/// The `τ` list is the set of undefined positions; deleting those positions
/// leaves a total map `g`, whose repeated values give the `σ` list and whose
/// missed values give the `δ` list.
pub fn canonical_form(f: &PMap) -> CanonicalWord {
    let taus = f.undefined_positions();
    let compressed: Vec<usize> = f.table().iter().filter_map(|&e| e).collect();
    let sigmas: Vec<usize> = compressed
        .windows(2)
        .enumerate()
        .filter_map(|(p, w)| (w[0] == w[1]).then_some(p))
        .collect();
    let deltas: Vec<usize> = (0..f.cod()).filter(|v| compressed.binary_search(v).is_err()).collect();
    CanonicalWord::from_parts(f.dom(), deltas, sigmas, taus)
        .expect("canonical factorization of a valid map")
}

/// One recorded rewriting step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    /// Identity family applied, e.g. `tau-sigma`.
    pub family: &'static str,
    /// Index case within the family, e.g. `i=j`.
    pub case: &'static str,
    /// Position of the rewritten factor pair, counted from the left.
    pub position: usize,
    /// The whole word after the step.
    pub word: String,
}

/// Default step budget for [`normalize`].
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

/// Rewrites a word to its canonical form, one identity application at a
/// time, and returns the canonical word.
pub fn normalize(word: &GenWord) -> Result<CanonicalWord, WordError> {
    normalize_with(word, DEFAULT_STEP_BUDGET, false).map(|(c, _)| c)
}

/// [`normalize`] with an explicit step budget and optional trace.
///
/// The strategy runs in phases, each of which strictly decreases a bounded
/// measure: first every `δ` is moved to the far left (possibly cancelling
/// against a `σ` or `τ`), then every remaining `σ` is moved left past the
/// `τ`s (possibly turning into a `τ`), and finally each homogeneous block
/// is sorted by its own identity. Each single step is one entry of the
/// machine-checked identity table.
pub fn normalize_with(
    word: &GenWord,
    budget: usize,
    record_trace: bool,
) -> Result<(CanonicalWord, Vec<RewriteStep>), WordError> {
    let mut factors = word.factors.clone();
    let domain = word.domain;
    let mut steps = 0usize;
    let mut trace = Vec::new();

    #[derive(Clone, Copy)]
    enum Phase {
        MoveDelta,
        MoveSigma,
        SortBlock(GenKind),
    }

    let phases = [
        Phase::MoveDelta,
        Phase::MoveSigma,
        Phase::SortBlock(GenKind::Delta),
        Phase::SortBlock(GenKind::Sigma),
        Phase::SortBlock(GenKind::Tau),
    ];

    for phase in phases {
        loop {
            let redex = factors.windows(2).position(|pair| {
                let (outer, inner) = (pair[0], pair[1]);
                match phase {
                    Phase::MoveDelta => {
                        matches!(outer.kind, GenKind::Sigma | GenKind::Tau) && inner.kind == GenKind::Delta
                    }
                    Phase::MoveSigma => outer.kind == GenKind::Tau && inner.kind == GenKind::Sigma,
                    Phase::SortBlock(kind) => {
                        outer.kind == kind
                            && inner.kind == kind
                            && match kind {
                                // δ block wants strictly decreasing indices.
                                GenKind::Delta => outer.index <= inner.index,
                                // σ and τ blocks want strictly increasing ones.
                                GenKind::Sigma | GenKind::Tau => outer.index >= inner.index,
                            }
                    }
                }
            });
            let Some(position) = redex else { break };
            if steps >= budget {
                return Err(WordError::NonTermination { budget });
            }
            steps += 1;
            let outer = factors[position];
            let inner = factors[position + 1];
            let case = identities::matching_case(outer, inner)
                .expect("every adjacent redex matches one identity case");
            match case.instantiate_rhs(outer, inner) {
                Rhs::Unit => {
                    factors.drain(position..position + 2);
                }
                Rhs::Pair(new_outer, new_inner) => {
                    factors[position] = new_outer;
                    factors[position + 1] = new_inner;
                }
            }
            if record_trace {
                let word = GenWord::new(domain, factors.clone()).expect("rewriting preserves typing");
                trace.push(RewriteStep {
                    family: case.family,
                    case: case.case,
                    position,
                    word: word.to_string(),
                });
            }
        }
    }

    let mut deltas: Vec<usize> = factors
        .iter()
        .take_while(|g| g.kind == GenKind::Delta)
        .map(|g| g.index)
        .collect();
    deltas.reverse();
    let sigmas: Vec<usize> = factors
        .iter()
        .filter(|g| g.kind == GenKind::Sigma)
        .map(|g| g.index)
        .collect();
    let taus: Vec<usize> = factors
        .iter()
        .filter(|g| g.kind == GenKind::Tau)
        .map(|g| g.index)
        .collect();
    let canonical = CanonicalWord::from_parts(domain, deltas, sigmas, taus)
        .expect("rewriting terminates in canonical shape");
    Ok((canonical, trace))
}
