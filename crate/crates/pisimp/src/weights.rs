/*! The two actions of total maps on the one-sided subcategories.

A total map `f` acts on a map `g` with downward-closed domain of definition
by `g ↦ f + g` (block sum with `f` on the left), and on a map with
upward-closed domain by `g ↦ g + f`. Both subcategories are closed under
the respective action, and the action is functorial in both arguments: it
preserves identities and satisfies the interchange law

```text
(f + g) ∘ (f' + g') = (f ∘ f') + (g ∘ g')
```

[`check_action_laws`] verifies all of this exhaustively below a size bound,
along with the generator equations `τⁿₙ = idₙ + τ⁰₀` and `τⁿ₀ = τ⁰₀ + idₙ`
that make the top (resp. bottom) `τ` maps the orbit of `τ⁰₀` under the
action.
*/

use serde::Serialize;
use thiserror::Error;

use crate::ordinals::{enumerate_hom, HomFlavor, PMap};

/// Which side the total map is summed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ActionSide {
    /// `act(f, g) = f + g`; acts on maps with downward-closed domains.
    Left,
    /// `act(f, g) = g + f`; acts on maps with upward-closed domains.
    Right,
}

impl ActionSide {
    pub fn flavor(self) -> HomFlavor {
        match self {
            ActionSide::Left => HomFlavor::PiL,
            ActionSide::Right => HomFlavor::PiR,
        }
    }
}

/// Errors from [`act`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("the acting map must be total")]
    NotTotal,
    #[error("the acted-on map is not in the {0:?} flavor")]
    WrongFlavor(HomFlavor),
}

/// Applies the action of the total map `f` to `g`.
pub fn act(side: ActionSide, f: &PMap, g: &PMap) -> Result<PMap, ActionError> {
    if !f.is_total() {
        return Err(ActionError::NotTotal);
    }
    if !g.in_flavor(side.flavor()) {
        return Err(ActionError::WrongFlavor(side.flavor()));
    }
    let result = match side {
        ActionSide::Left => f.ordinal_sum(g),
        ActionSide::Right => g.ordinal_sum(f),
    };
    debug_assert!(result.in_flavor(side.flavor()));
    Ok(result)
}

/// One failed law instance, with the values of both sides.
#[derive(Debug, Clone, Serialize)]
pub struct ActionCounterexample {
    pub law: String,
    pub detail: String,
}

/// Exhaustive action-law verification report.
#[derive(Debug, Clone, Serialize)]
pub struct ActionReport {
    pub bound: usize,
    pub unit_instances: usize,
    pub identity_instances: usize,
    pub interchange_instances: usize,
    pub closure_instances: usize,
    pub generator_instances: usize,
    pub counterexamples: Vec<ActionCounterexample>,
    pub holds: bool,
}

/// Verifies the action laws for both sides, exhaustively over all total
/// maps and all flavored maps with sizes at most `bound`.
pub fn check_action_laws(bound: usize) -> ActionReport {
    let mut report = ActionReport {
        bound,
        unit_instances: 0,
        identity_instances: 0,
        interchange_instances: 0,
        closure_instances: 0,
        generator_instances: 0,
        counterexamples: Vec::new(),
        holds: true,
    };
    let fail = |counterexamples: &mut Vec<ActionCounterexample>, law: &str, detail: String| {
        if counterexamples.len() < 10 {
            counterexamples.push(ActionCounterexample { law: law.to_string(), detail });
        }
    };

    for side in [ActionSide::Left, ActionSide::Right] {
        let flavor = side.flavor();
        let flavored: Vec<Vec<Vec<PMap>>> = (0..=bound)
            .map(|p| (0..=bound).map(|q| enumerate_hom(p, q, flavor)).collect())
            .collect();
        let totals: Vec<Vec<Vec<PMap>>> = (0..=bound)
            .map(|m| (0..=bound).map(|n| enumerate_hom(m, n, HomFlavor::Delta)).collect())
            .collect();

        // Unit: acting with id₀ is the identity.
        for row in &flavored {
            for homset in row {
                for g in homset {
                    report.unit_instances += 1;
                    let acted = act(side, &PMap::identity(0), g).unwrap();
                    if &acted != g {
                        fail(&mut report.counterexamples, "unit", format!("side {side:?}, g = {g}"));
                    }
                }
            }
        }

        // Identities: id_n acting on id_p is id_{n+p}.
        for n in 0..=bound {
            for p in 0..=bound {
                report.identity_instances += 1;
                let acted = act(side, &PMap::identity(n), &PMap::identity(p)).unwrap();
                if acted != PMap::identity(n + p) {
                    fail(&mut report.counterexamples, "identity", format!("side {side:?}, n = {n}, p = {p}"));
                }
            }
        }

        // Interchange in both arguments at once:
        // act(f, g) ∘ act(f', g') = act(f ∘ f', g ∘ g').
        for mid_t in 0..=bound {
            for cod_t in 0..=bound {
                for dom_t in 0..=bound {
                    for f in &totals[mid_t][cod_t] {
                        for f2 in &totals[dom_t][mid_t] {
                            let ff2 = f.compose(f2).unwrap();
                            for mid_g in 0..=bound {
                                for cod_g in 0..=bound {
                                    for dom_g in 0..=bound {
                                        for g in &flavored[mid_g][cod_g] {
                                            for g2 in &flavored[dom_g][mid_g] {
                                                report.interchange_instances += 1;
                                                let lhs = act(side, f, g)
                                                    .unwrap()
                                                    .compose(&act(side, f2, g2).unwrap())
                                                    .unwrap();
                                                let rhs =
                                                    act(side, &ff2, &g.compose(g2).unwrap()).unwrap();
                                                if lhs != rhs {
                                                    fail(
                                                        &mut report.counterexamples,
                                                        "interchange",
                                                        format!(
                                                            "side {side:?}: f={f}, f'={f2}, g={g}, g'={g2}"
                                                        ),
                                                    );
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }

        // Closure: the result stays inside the flavor.
        for m in 0..=bound {
            for n in 0..=bound {
                for f in &totals[m][n] {
                    for row in &flavored {
                        for homset in row {
                            for g in homset {
                                report.closure_instances += 1;
                                if !act(side, f, g).unwrap().in_flavor(flavor) {
                                    fail(
                                        &mut report.counterexamples,
                                        "closure",
                                        format!("side {side:?}: f={f}, g={g}"),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Generator equations: τⁿₙ = idₙ + τ⁰₀ and τⁿ₀ = τ⁰₀ + idₙ, n ≤ 8.
    let tau00 = PMap::tau(0, 0).unwrap();
    for n in 0..=8 {
        report.generator_instances += 2;
        let top = act(ActionSide::Left, &PMap::identity(n), &tau00).unwrap();
        if top != PMap::tau(n, n).unwrap() {
            fail(&mut report.counterexamples, "generator", format!("idₙ+τ⁰₀ ≠ τⁿₙ at n = {n}"));
        }
        let bottom = act(ActionSide::Right, &PMap::identity(n), &tau00).unwrap();
        if bottom != PMap::tau(n, 0).unwrap() {
            fail(&mut report.counterexamples, "generator", format!("τ⁰₀+idₙ ≠ τⁿ₀ at n = {n}"));
        }
    }

    report.holds = report.counterexamples.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{canonical_form, GenWord, Generator};

    #[test]
    fn action_examples() {
        let tau00 = PMap::tau(0, 0).unwrap();
        // Left action of idₙ shifts values into the top block.
        assert_eq!(
            act(ActionSide::Left, &PMap::identity(1), &tau00).unwrap(),
            PMap::tau(1, 1).unwrap()
        );
        // Unit of the sum.
        let g: PMap = "3->2:[0,1,_]".parse().unwrap();
        assert_eq!(act(ActionSide::Left, &PMap::identity(0), &g).unwrap(), g);
        // Right action example: id₁ + δ⁰₀ is the map 1 → 2 hitting 0.
        let acted = act(ActionSide::Right, &PMap::delta(0, 0).unwrap(), &PMap::identity(1)).unwrap();
        assert_eq!(acted, "1->2:[0]".parse().unwrap());
    }

    #[test]
    fn action_guards() {
        let partial: PMap = "2->2:[_,1]".parse().unwrap();
        assert_eq!(
            act(ActionSide::Left, &partial, &PMap::identity(1)),
            Err(ActionError::NotTotal)
        );
        assert_eq!(
            act(ActionSide::Left, &PMap::identity(1), &partial),
            Err(ActionError::WrongFlavor(HomFlavor::PiL))
        );
        assert!(act(ActionSide::Right, &PMap::identity(1), &partial).is_ok());
    }

    #[test]
    fn laws_hold_at_bound_2() {
        let report = check_action_laws(2);
        assert!(report.holds, "{:?}", report.counterexamples);
        assert!(report.interchange_instances > 0);
    }

    /// Every map with a downward-closed domain is built from total maps and
    /// the action orbit of τ⁰₀: its canonical word has only top-index τ
    /// factors. Dually on the other side with bottom-index factors.
    #[test]
    fn one_sided_maps_are_generated_by_the_orbit() {
        for p in 0..=5usize {
            for q in 0..=5usize {
                for g in enumerate_hom(p, q, HomFlavor::PiL) {
                    let canonical = canonical_form(&g);
                    let t = canonical.taus().len();
                    for (offset, &k) in canonical.taus().iter().enumerate() {
                        // Factor τ_k is applied at intermediate size
                        // p - (t - 1 - offset), so top index is size - 1.
                        let size = p - (t - 1 - offset);
                        assert_eq!(k, size - 1, "non-top τ factor for {g}");
                    }
                }
                for g in enumerate_hom(p, q, HomFlavor::PiR) {
                    let canonical = canonical_form(&g);
                    let t = canonical.taus().len();
                    assert_eq!(canonical.taus(), (0..t).collect::<Vec<_>>().as_slice());
                    // Rebuild g from total factors plus a stack of bottom
                    // maps τ⁰₀ + id (index 0 at every stage); the stack is
                    // not itself canonical, but it evaluates to the same
                    // map — that is the generation claim.
                    let mut factors: Vec<Generator> =
                        canonical.deltas().iter().rev().map(|&i| Generator::delta(i)).collect();
                    factors.extend(canonical.sigmas().iter().map(|&j| Generator::sigma(j)));
                    factors.extend((0..t).map(|_| Generator::tau(0)));
                    let rebuilt = GenWord::new(p, factors).unwrap();
                    assert_eq!(rebuilt.eval(), g, "bottom-τ stack disagrees for {g}");
                }
            }
        }
    }
}
