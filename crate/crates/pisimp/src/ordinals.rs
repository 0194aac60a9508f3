/*! Finite ordinals and partial monotone maps.

A [`PMap`] is a partial monotone function between the finite linear orders
`{0, .., n-1}`. Total maps are exactly the morphisms of the simplicial
category; allowing undefined entries adds the third generator family `τ`
alongside the familiar `σ` (collapse) and `δ` (skip) maps.

Composition is Kleene composition: `(g ∘ f)(i)` is defined iff `f(i)` is
defined and `g(f(i))` is defined. Two wide subcategories matter downstream:
maps whose domain of definition is downward closed ([`HomFlavor::PiL`]) and
maps whose domain of definition is upward closed ([`HomFlavor::PiR`]).

Hom-sets are small enough to enumerate outright, and [`enumerate_hom`] does
so in a fixed lexicographic order (undefined sorts before `0`) so that golden
tests stay stable. [`count_hom`] computes the same sizes through independent
closed-form binomial sums.
*/

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Hard cap on ordinal sizes. Everything here is meant for desk-scale
/// exhaustive work, not asymptotics.
pub const MAX_ORDINAL: usize = 1 << 16;

/// Errors from constructing or composing partial monotone maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PMapError {
    #[error("table has {got} entries but the domain is {dom}")]
    LengthMismatch { dom: usize, got: usize },
    #[error("entry {value} at position {pos} is not below the codomain {cod}")]
    ValueOutOfRange { pos: usize, value: usize, cod: usize },
    #[error("defined entries decrease: f({i}) = {fi} > {fj} = f({j})")]
    NonMonotone { i: usize, j: usize, fi: usize, fj: usize },
    #[error("cannot compose: inner map has codomain {inner_cod}, outer map has domain {outer_dom}")]
    TypeMismatch { inner_cod: usize, outer_dom: usize },
    #[error("generator index {index} is out of range at level {level}")]
    IndexOutOfRange { index: usize, level: usize },
    #[error("ordinal size {0} exceeds the supported maximum {MAX_ORDINAL}")]
    SizeLimit(usize),
}

/// The four hom-set flavors: total maps, all partial maps, and the two
/// one-sided subcategories.
///
/// As predicates on [`PMap`], `Delta ⊂ PiL ∩ PiR` and `PiL, PiR ⊂ Pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomFlavor {
    /// Total monotone maps.
    Delta,
    /// All partial monotone maps.
    Pi,
    /// Domain of definition is downward closed: if `f(j)` is defined and
    /// `i ≤ j` then `f(i)` is defined.
    PiL,
    /// Domain of definition is upward closed: if `f(i)` is defined and
    /// `i ≤ j` then `f(j)` is defined.
    PiR,
}

impl HomFlavor {
    pub const ALL: [HomFlavor; 4] = [HomFlavor::Delta, HomFlavor::Pi, HomFlavor::PiL, HomFlavor::PiR];

    pub fn name(self) -> &'static str {
        match self {
            HomFlavor::Delta => "delta",
            HomFlavor::Pi => "pi",
            HomFlavor::PiL => "pi-l",
            HomFlavor::PiR => "pi-r",
        }
    }
}

/// A partial monotone map between finite ordinals.
///
/// The full table is stored: entry `i` is `Some(f(i))` or `None` when `f`
/// is undefined at `i`. Equality is entrywise equality of
/// `(dom, cod, table)`. The derived ordering is lexicographic on the same
/// triple, with `None` before `Some(0)`; this is the enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PMap {
    dom: usize,
    cod: usize,
    table: Vec<Option<usize>>,
}

impl PMap {
    /// Validating constructor. The table length must equal `dom`, every
    /// defined entry must be below `cod`, and defined entries must be
    /// weakly increasing.
    pub fn new(dom: usize, cod: usize, table: Vec<Option<usize>>) -> Result<PMap, PMapError> {
        if dom > MAX_ORDINAL {
            return Err(PMapError::SizeLimit(dom));
        }
        if cod > MAX_ORDINAL {
            return Err(PMapError::SizeLimit(cod));
        }
        if table.len() != dom {
            return Err(PMapError::LengthMismatch { dom, got: table.len() });
        }
        let mut last: Option<(usize, usize)> = None;
        for (pos, entry) in table.iter().enumerate() {
            if let Some(value) = *entry {
                if value >= cod {
                    return Err(PMapError::ValueOutOfRange { pos, value, cod });
                }
                if let Some((i, fi)) = last {
                    if fi > value {
                        return Err(PMapError::NonMonotone { i, j: pos, fi, fj: value });
                    }
                }
                last = Some((pos, value));
            }
        }
        Ok(PMap { dom, cod, table })
    }

    /// The identity on the ordinal `n`.
    pub fn identity(n: usize) -> PMap {
        PMap { dom: n, cod: n, table: (0..n).map(Some).collect() }
    }

    /// `σⁿᵢ : n+1 → n`, the surjection taking the value `i` twice.
    /// Requires `n ≥ 1` and `0 ≤ i < n`.
    pub fn sigma(n: usize, i: usize) -> Result<PMap, PMapError> {
        if n == 0 || i >= n {
            return Err(PMapError::IndexOutOfRange { index: i, level: n });
        }
        if n + 1 > MAX_ORDINAL {
            return Err(PMapError::SizeLimit(n + 1));
        }
        let table = (0..n + 1).map(|k| Some(if k <= i { k } else { k - 1 })).collect();
        Ok(PMap { dom: n + 1, cod: n, table })
    }

    /// `δⁿᵢ : n → n+1`, the injection missing the value `i`.
    /// Requires `0 ≤ i ≤ n`.
    pub fn delta(n: usize, i: usize) -> Result<PMap, PMapError> {
        if i > n {
            return Err(PMapError::IndexOutOfRange { index: i, level: n });
        }
        if n + 1 > MAX_ORDINAL {
            return Err(PMapError::SizeLimit(n + 1));
        }
        let table = (0..n).map(|k| Some(if k < i { k } else { k + 1 })).collect();
        Ok(PMap { dom: n, cod: n + 1, table })
    }

    /// `τⁿᵢ : n+1 → n`, the surjection undefined at `i`.
    /// Requires `0 ≤ i ≤ n`.
    pub fn tau(n: usize, i: usize) -> Result<PMap, PMapError> {
        if i > n {
            return Err(PMapError::IndexOutOfRange { index: i, level: n });
        }
        if n + 1 > MAX_ORDINAL {
            return Err(PMapError::SizeLimit(n + 1));
        }
        let table = (0..n + 1)
            .map(|k| {
                if k == i {
                    None
                } else if k < i {
                    Some(k)
                } else {
                    Some(k - 1)
                }
            })
            .collect();
        Ok(PMap { dom: n + 1, cod: n, table })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// `Some(f(i))` when defined, `None` otherwise.
    pub fn get(&self, i: usize) -> Option<usize> {
        self.table[i]
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    /// Positions where the map is undefined, ascending.
    pub fn undefined_positions(&self) -> Vec<usize> {
        self.table
            .iter()
            .enumerate()
            .filter_map(|(i, e)| if e.is_none() { Some(i) } else { None })
            .collect()
    }

    /// Kleene composition `self ∘ inner`; `inner` is applied first.
    pub fn compose(&self, inner: &PMap) -> Result<PMap, PMapError> {
        if inner.cod != self.dom {
            return Err(PMapError::TypeMismatch { inner_cod: inner.cod, outer_dom: self.dom });
        }
        let table = inner.table.iter().map(|e| e.and_then(|v| self.table[v])).collect();
        // Monotone composition of monotone partials is monotone.
        Ok(PMap { dom: inner.dom, cod: self.cod, table })
    }

    /// Ordinal sum `self + other`: the block map on `dom+dom'` that acts as
    /// `self` on the first block and as `other`, shifted by `self.cod`, on
    /// the second.
    pub fn ordinal_sum(&self, other: &PMap) -> PMap {
        let mut table = Vec::with_capacity(self.dom + other.dom);
        table.extend_from_slice(&self.table);
        table.extend(other.table.iter().map(|e| e.map(|v| v + self.cod)));
        PMap { dom: self.dom + other.dom, cod: self.cod + other.cod, table }
    }

    /// Membership in the given hom-set flavor.
    pub fn in_flavor(&self, flavor: HomFlavor) -> bool {
        match flavor {
            HomFlavor::Pi => true,
            HomFlavor::Delta => self.is_total(),
            HomFlavor::PiL => {
                // Defined positions form a prefix.
                let first_undef = self.table.iter().position(Option::is_none);
                match first_undef {
                    None => true,
                    Some(p) => self.table[p..].iter().all(Option::is_none),
                }
            }
            HomFlavor::PiR => {
                // Defined positions form a suffix.
                let first_def = self.table.iter().position(Option::is_some);
                match first_def {
                    None => true,
                    Some(p) => self.table[p..].iter().all(Option::is_some),
                }
            }
        }
    }
}

impl fmt::Display for PMap {
    /// The textual literal `n->m:[v0,v1,...]` with `_` for undefined,
    /// e.g. `3->2:[_,0,0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:[", self.dom, self.cod)?;
        for (i, entry) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match entry {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "_")?,
            }
        }
        write!(f, "]")
    }
}

/// Errors from parsing the `n->m:[...]` literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PMapParseError {
    #[error("malformed map literal: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] PMapError),
}

impl FromStr for PMap {
    type Err = PMapParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |msg: &str| PMapParseError::Syntax(msg.to_string());
        let s = s.trim();
        let (sizes, body) = s.split_once(':').ok_or_else(|| syntax("expected `:` before the table"))?;
        let (dom_s, cod_s) = sizes.split_once("->").ok_or_else(|| syntax("expected `dom->cod`"))?;
        let dom: usize = dom_s.trim().parse().map_err(|_| syntax("domain is not a number"))?;
        let cod: usize = cod_s.trim().parse().map_err(|_| syntax("codomain is not a number"))?;
        let body = body.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| syntax("expected a `[...]` table"))?;
        let mut table = Vec::new();
        if !inner.trim().is_empty() {
            for item in inner.split(',') {
                let item = item.trim();
                if item == "_" {
                    table.push(None);
                } else {
                    let v: usize = item.parse().map_err(|_| syntax("table entry is neither `_` nor a number"))?;
                    table.push(Some(v));
                }
            }
        }
        Ok(PMap::new(dom, cod, table)?)
    }
}


/// All partial monotone maps `n → m` of the given flavor, duplicate-free,
/// in lexicographic table order with undefined before `0`.
pub fn enumerate_hom(n: usize, m: usize, flavor: HomFlavor) -> Vec<PMap> {
    let mut out = Vec::new();
    let mut table: Vec<Option<usize>> = vec![None; n];
    fn rec(
        pos: usize,
        n: usize,
        m: usize,
        min_next: usize,
        table: &mut Vec<Option<usize>>,
        flavor: HomFlavor,
        out: &mut Vec<PMap>,
    ) {
        if pos == n {
            let candidate = PMap { dom: n, cod: m, table: table.clone() };
            if candidate.in_flavor(flavor) {
                out.push(candidate);
            }
            return;
        }
        table[pos] = None;
        rec(pos + 1, n, m, min_next, table, flavor, out);
        for v in min_next..m {
            table[pos] = Some(v);
            rec(pos + 1, n, m, v, table, flavor, out);
        }
        table[pos] = None;
    }
    rec(0, n, m, 0, &mut table, flavor, &mut out);
    out
}

/// Closed-form hom-set size, independent of [`enumerate_hom`].
///
/// Total maps `n → m` are counted by `C(n+m-1, n)`; the partial flavors sum
/// that count over the admissible domains of definition.
pub fn count_hom(n: usize, m: usize, flavor: HomFlavor) -> u128 {
    match flavor {
        HomFlavor::Delta => count_total(n, m),
        // A one-sided map is a total map on a prefix (resp. suffix) of the
        // domain; the two counts agree by the evident symmetry.
        HomFlavor::PiL | HomFlavor::PiR => (0..=n).map(|k| count_total(k, m)).sum(),
        HomFlavor::Pi => (0..=n).map(|k| binomial(n, k) * count_total(k, m)).sum(),
    }
}

/// Number of total monotone maps `n → m`.
fn count_total(n: usize, m: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    binomial(n + m - 1, n)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
