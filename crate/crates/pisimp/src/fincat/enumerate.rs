//! Exhaustive enumeration of functors, natural transformations, and
//! monads, with deterministic output order and a search budget.
//!
//! Backtracking assigns images in id order and prunes on the first
//! violated square, so the emitted order is the lexicographic order of the
//! assignment vectors.

use std::sync::Arc;

use thiserror::Error;

use super::category::FinCat;
use super::functor::FinFunctor;
use super::monad::Monad;
use super::nat::NatTrans;

/// Guard on the size of a search space before it is walked.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_search: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_search: 10_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space of about {0} states exceeds the budget of {1}")]
    SearchSpaceTooLarge(u128, u64),
}

fn guard(estimate: u128, budget: Budget) -> Result<(), SearchError> {
    if estimate > budget.max_search as u128 {
        Err(SearchError::SearchSpaceTooLarge(estimate, budget.max_search))
    } else {
        Ok(())
    }
}

/// All functors `X → C`, in lexicographic order of their assignment
/// vectors.
pub fn enumerate_functors(
    x: &Arc<FinCat>,
    c: &Arc<FinCat>,
    budget: Budget,
) -> Result<Vec<FinFunctor>, SearchError> {
    let non_identity: Vec<usize> =
        (0..x.n_morphisms()).filter(|&m| !x.is_identity(m)).collect();
    let max_hom = (0..c.n_objects())
        .flat_map(|a| (0..c.n_objects()).map(move |b| (a, b)))
        .map(|(a, b)| c.hom(a, b).len())
        .max()
        .unwrap_or(1)
        .max(1);
    let estimate = (c.n_objects().max(1) as u128)
        .saturating_pow(x.n_objects() as u32)
        .saturating_mul((max_hom as u128).saturating_pow(non_identity.len() as u32));
    guard(estimate, budget)?;

    let mut out = Vec::new();
    let mut obj_map = vec![0usize; x.n_objects()];
    let mut mor_map = vec![usize::MAX; x.n_morphisms()];

    fn assign_mors(
        x: &Arc<FinCat>,
        c: &Arc<FinCat>,
        non_identity: &[usize],
        k: usize,
        obj_map: &mut Vec<usize>,
        mor_map: &mut Vec<usize>,
        out: &mut Vec<FinFunctor>,
    ) {
        if k == non_identity.len() {
            let functor = FinFunctor::new(
                Arc::clone(x),
                Arc::clone(c),
                obj_map.clone(),
                mor_map.clone(),
            )
            .expect("incremental checks guarantee functoriality");
            out.push(functor);
            return;
        }
        let m = non_identity[k];
        let rec = x.morphism(m);
        for image in c.hom(obj_map[rec.src], obj_map[rec.tgt]) {
            mor_map[m] = image;
            // Check every composite all of whose pieces are assigned.
            let ok = (0..x.n_morphisms()).all(|g| {
                (0..x.n_morphisms()).all(|f| {
                    let Some(gf) = x.compose(g, f) else { return true };
                    let (ig, iff, igf) = (mor_map[g], mor_map[f], mor_map[gf]);
                    if ig == usize::MAX || iff == usize::MAX || igf == usize::MAX {
                        return true;
                    }
                    c.compose(ig, iff) == Some(igf)
                })
            });
            if ok {
                assign_mors(x, c, non_identity, k + 1, obj_map, mor_map, out);
            }
        }
        mor_map[m] = usize::MAX;
    }

    fn assign_objs(
        x: &Arc<FinCat>,
        c: &Arc<FinCat>,
        non_identity: &[usize],
        o: usize,
        obj_map: &mut Vec<usize>,
        mor_map: &mut Vec<usize>,
        out: &mut Vec<FinFunctor>,
    ) {
        if o == x.n_objects() {
            for i in 0..x.n_objects() {
                mor_map[x.identity_of(i)] = c.identity_of(obj_map[i]);
            }
            assign_mors(x, c, non_identity, 0, obj_map, mor_map, out);
            for i in 0..x.n_objects() {
                mor_map[x.identity_of(i)] = usize::MAX;
            }
            return;
        }
        for image in 0..c.n_objects() {
            obj_map[o] = image;
            assign_objs(x, c, non_identity, o + 1, obj_map, mor_map, out);
        }
    }

    if x.n_objects() == 0 {
        out.push(
            FinFunctor::new(Arc::clone(x), Arc::clone(c), Vec::new(), Vec::new())
                .expect("empty functor"),
        );
        return Ok(out);
    }
    if c.n_objects() == 0 {
        return Ok(out); // no functors out of a nonempty category
    }
    assign_objs(x, c, &non_identity, 0, &mut obj_map, &mut mor_map, &mut out);
    Ok(out)
}

/// All natural transformations `F ⇒ G`, in lexicographic component order.
pub fn enumerate_nats(
    f: &FinFunctor,
    g: &FinFunctor,
    budget: Budget,
) -> Result<Vec<NatTrans>, SearchError> {
    let dom = f.source();
    let cod = f.target();
    let candidates: Vec<Vec<usize>> = (0..dom.n_objects())
        .map(|x| cod.hom(f.apply_obj(x), g.apply_obj(x)))
        .collect();
    let estimate = candidates.iter().map(|h| h.len() as u128).product::<u128>();
    guard(estimate, budget)?;

    let mut out = Vec::new();
    let mut components = vec![usize::MAX; dom.n_objects()];

    fn rec(
        f: &FinFunctor,
        g: &FinFunctor,
        candidates: &[Vec<usize>],
        x: usize,
        components: &mut Vec<usize>,
        out: &mut Vec<NatTrans>,
    ) {
        let dom = f.source();
        let cod = f.target();
        if x == dom.n_objects() {
            let nat = NatTrans::new(f.clone(), g.clone(), components.clone())
                .expect("incremental checks guarantee naturality");
            out.push(nat);
            return;
        }
        'next: for &cand in &candidates[x] {
            components[x] = cand;
            // Naturality squares whose both endpoints are assigned.
            for (m, rec_m) in dom.morphisms().iter().enumerate() {
                let (a, b) = (rec_m.src, rec_m.tgt);
                if components[a] == usize::MAX || components[b] == usize::MAX {
                    continue;
                }
                let left = cod.compose(g.apply_mor(m), components[a]);
                let right = cod.compose(components[b], f.apply_mor(m));
                if left != right || left.is_none() {
                    continue 'next;
                }
            }
            rec(f, g, candidates, x + 1, components, out);
        }
        components[x] = usize::MAX;
    }

    rec(f, g, &candidates, 0, &mut components, &mut out);
    Ok(out)
}

/// All monads on `C`: endofunctors with a unit and multiplication passing
/// the monad laws, in enumeration order of `(T, η, μ)`.
pub fn enumerate_monads(c: &Arc<FinCat>, budget: Budget) -> Result<Vec<Monad>, SearchError> {
    let mut out = Vec::new();
    let id = FinFunctor::identity(c);
    for t in enumerate_functors(c, c, budget)? {
        let tt = t.then(&t);
        for eta in enumerate_nats(&id, &t, budget)? {
            for mu in enumerate_nats(&tt, &t, budget)? {
                if let Ok(monad) = Monad::new(t.clone(), eta.clone(), mu) {
                    out.push(monad);
                }
            }
        }
    }
    Ok(out)
}
