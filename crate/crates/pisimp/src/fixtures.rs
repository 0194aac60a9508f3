/*! Bundled example categories and monads.

Everything here is also shipped as JSON under `fixtures/` in the repository
root; a golden test keeps the files and these builders in sync. Poset
categories use morphism ids of the form `a->b`; identity ids are the
endomorphism names `a->a`.

The non-poset categories are the two smallest shapes with parallel arrows
that the search layer uses as monad carriers and probes:

- [`parallel_pair`]: objects `a`, `b` with two parallel arrows
  `u, v : a → b`. Its only monad is the identity monad.
- [`twist`]: the parallel pair extended by an involution `w` on `b` that
  swaps `u` and `v`. Exhaustive search finds six monads on it: the
  identity, one carried by the twist automorphism itself (unit and
  multiplication both `w`), and four collapsing `a` onto `b` — making it
  the smallest non-thin carrier with nontrivial monads in this corpus.
*/

use std::sync::Arc;

use crate::bridge::compare::ProbeFunctor;
use crate::fincat::category::{CategoryData, FinCat, MorphismData};
use crate::fincat::enumerate::{enumerate_functors, Budget, SearchError};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;
use crate::fincat::nat::NatTrans;

/// Builds the category of a finite poset given by a reflexive, transitive
/// `leq` on `0..n`. Objects are the given names; the arrow witnessing
/// `a ≤ b` is `a->b`.
pub fn poset_category(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> Arc<FinCat> {
    let n = names.len();
    let mut morphisms = Vec::new();
    let mut compose = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if leq(a, b) {
                morphisms.push(MorphismData {
                    id: format!("{}->{}", names[a], names[b]),
                    src: names[a].to_string(),
                    tgt: names[b].to_string(),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if leq(a, b) && leq(b, c) && a != b && b != c {
                    compose.push((
                        format!("{}->{}", names[b], names[c]),
                        format!("{}->{}", names[a], names[b]),
                        format!("{}->{}", names[a], names[c]),
                    ));
                }
            }
        }
    }
    let data = CategoryData {
        objects: names.iter().map(|s| s.to_string()).collect(),
        morphisms,
        identities: names.iter().map(|s| (s.to_string(), format!("{s}->{s}"))).collect(),
        compose,
    };
    FinCat::from_data(&data).expect("posets are categories")
}

/// The chain poset `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> Arc<FinCat> {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poset_category(&refs, |a, b| a <= b)
}

/// The 2×2 diamond poset `bot < l, r < top` with `l`, `r` incomparable.
pub fn diamond() -> Arc<FinCat> {
    let leq = |a: usize, b: usize| a == b || a == 0 || b == 3;
    poset_category(&["bot", "l", "r", "top"], leq)
}

/// The empty category.
pub fn empty() -> Arc<FinCat> {
    FinCat::from_data(&CategoryData {
        objects: vec![],
        morphisms: vec![],
        identities: Default::default(),
        compose: vec![],
    })
    .expect("empty category")
}

/// The one-object one-morphism category.
pub fn terminal() -> Arc<FinCat> {
    poset_category(&["*"], |_, _| true)
}

/// Two objects with a parallel pair of arrows `u, v : a → b`.
pub fn parallel_pair() -> Arc<FinCat> {
    let data = CategoryData {
        objects: vec!["a".into(), "b".into()],
        morphisms: vec![
            MorphismData { id: "a->a".into(), src: "a".into(), tgt: "a".into() },
            MorphismData { id: "b->b".into(), src: "b".into(), tgt: "b".into() },
            MorphismData { id: "u".into(), src: "a".into(), tgt: "b".into() },
            MorphismData { id: "v".into(), src: "a".into(), tgt: "b".into() },
        ],
        identities: [("a".to_string(), "a->a".to_string()), ("b".to_string(), "b->b".to_string())]
            .into_iter()
            .collect(),
        compose: vec![],
    };
    FinCat::from_data(&data).expect("parallel pair is a category")
}

/// The parallel pair extended by an involution `w` on `b` with
/// `w∘u = v` and `w∘v = u`.
pub fn twist() -> Arc<FinCat> {
    let data = CategoryData {
        objects: vec!["a".into(), "b".into()],
        morphisms: vec![
            MorphismData { id: "a->a".into(), src: "a".into(), tgt: "a".into() },
            MorphismData { id: "b->b".into(), src: "b".into(), tgt: "b".into() },
            MorphismData { id: "u".into(), src: "a".into(), tgt: "b".into() },
            MorphismData { id: "v".into(), src: "a".into(), tgt: "b".into() },
            MorphismData { id: "w".into(), src: "b".into(), tgt: "b".into() },
        ],
        identities: [("a".to_string(), "a->a".to_string()), ("b".to_string(), "b->b".to_string())]
            .into_iter()
            .collect(),
        compose: vec![
            ("w".into(), "u".into(), "v".into()),
            ("w".into(), "v".into(), "u".into()),
            ("w".into(), "w".into(), "b->b".into()),
        ],
    };
    FinCat::from_data(&data).expect("twist is a category")
}

/// A monad on a poset category from a monotone, inflationary, idempotent
/// map on object indices (a closure operator).
pub fn poset_closure_monad(cat: &Arc<FinCat>, cl: &[usize]) -> Monad {
    let n = cat.n_objects();
    assert_eq!(cl.len(), n);
    let obj_map: Vec<usize> = cl.to_vec();
    let mor_map: Vec<usize> = cat
        .morphisms()
        .iter()
        .map(|m| {
            let id = format!(
                "{}->{}",
                cat.object_name(cl[m.src]),
                cat.object_name(cl[m.tgt])
            );
            cat.mor_id(&id).expect("closure of a poset arrow exists")
        })
        .collect();
    let t = FinFunctor::new(Arc::clone(cat), Arc::clone(cat), obj_map, mor_map)
        .expect("closure operators are functors");
    let arrow = |a: usize, b: usize| {
        cat.mor_id(&format!("{}->{}", cat.object_name(a), cat.object_name(b)))
            .expect("poset arrow exists")
    };
    let eta = NatTrans::new(
        FinFunctor::identity(cat),
        t.clone(),
        (0..n).map(|o| arrow(o, cl[o])).collect(),
    )
    .expect("inflationarity makes the unit natural");
    let mu = NatTrans::new(
        t.then(&t),
        t.clone(),
        (0..n).map(|o| arrow(cl[cl[o]], cl[o])).collect(),
    )
    .expect("idempotence makes the multiplication natural");
    Monad::new(t, eta, mu).expect("closure operators satisfy the monad laws")
}

/// The running example: the closure operator `0↦1, 1↦1, 2↦2` on the
/// chain `0 < 1 < 2`.
pub fn closure_chain3() -> Monad {
    poset_closure_monad(&chain(3), &[1, 1, 2])
}

/// The closure operator sending everything to the top of the chain `0 < 1`.
pub fn closure_chain2() -> Monad {
    poset_closure_monad(&chain(2), &[1, 1])
}

/// A closure operator on the diamond: `bot ↦ l`, `r ↦ top`.
pub fn closure_diamond() -> Monad {
    let cat = diamond();
    // Object order is sorted: bot, l, r, top.
    poset_closure_monad(&cat, &[1, 1, 3, 3])
}

/// The identity monad on the parallel pair.
pub fn identity_parallel() -> Monad {
    Monad::identity_monad(&parallel_pair())
}

/// A probe category by name, as accepted on the command line.
pub fn probe_by_name(name: &str) -> Option<Arc<FinCat>> {
    match name {
        "empty" => Some(empty()),
        "terminal" => Some(terminal()),
        "chain2" => Some(chain(2)),
        "parallel" => Some(parallel_pair()),
        "twist" => Some(twist()),
        "chain3" => Some(chain(3)),
        "diamond" => Some(diamond()),
        _ => None,
    }
}

/// The default probe set: the empty category, the terminal category, the
/// two-element chain, and the non-thin parallel pair.
pub fn default_probes() -> Vec<(String, Arc<FinCat>)> {
    ["empty", "terminal", "chain2", "parallel"]
        .into_iter()
        .map(|name| (name.to_string(), probe_by_name(name).unwrap()))
        .collect()
}

/// All functors between consecutive probes, in both directions, labeled
/// for the naturality section of the comparison reports.
pub fn probe_functors_between(
    probes: &[(String, Arc<FinCat>)],
    budget: Budget,
) -> Result<Vec<ProbeFunctor>, SearchError> {
    let mut out = Vec::new();
    for window in 0..probes.len().saturating_sub(1) {
        for (from, to) in [(window, window + 1), (window + 1, window)] {
            let functors = enumerate_functors(&probes[from].1, &probes[to].1, budget)?;
            for (k, functor) in functors.into_iter().enumerate() {
                out.push(ProbeFunctor {
                    from,
                    to,
                    label: format!("{}->{}#{k}", probes[from].0, probes[to].0),
                    functor,
                });
            }
        }
    }
    Ok(out)
}
