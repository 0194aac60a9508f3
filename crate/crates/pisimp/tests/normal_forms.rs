//! Oracle suites for canonical forms and the rewriting normalizer.
//!
//! The brute-force oracle is hom-set enumeration: soundness and uniqueness
//! of the factorization are checked against every map, and the normalizer
//! is checked against `canonical_form ∘ eval` on seeded random words.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pisimp::ordinals::{enumerate_hom, HomFlavor, PMap};
use pisimp::words::{canonical_form, normalize, CanonicalWord, GenKind, GenWord, Generator};

#[test]
fn canonical_form_is_sound_and_injective_up_to_size_5() {
    for n in 0..=5usize {
        for m in 0..=5usize {
            let homset = enumerate_hom(n, m, HomFlavor::Pi);
            let mut seen = BTreeSet::new();
            for f in &homset {
                let canonical = canonical_form(f);
                assert_eq!(&canonical.eval(), f, "eval ∘ canonical_form ≠ id at {f}");
                let r = canonical.deltas().len() as i64;
                let s = canonical.sigmas().len() as i64;
                let t = canonical.taus().len() as i64;
                assert_eq!(m as i64 - n as i64, r - s - t, "index arithmetic at {f}");
                assert!(seen.insert(canonical.word().to_string()), "duplicate canonical word for {f}");
            }
            assert_eq!(seen.len(), homset.len());
        }
    }
}

/// Generates every canonical word `n → m` by free choice of index lists
/// and checks the resulting words biject with the hom-set.
#[test]
fn canonical_words_biject_with_hom_sets_up_to_size_5() {
    fn subsets(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (idx, &first) in pool.iter().enumerate() {
            for mut rest in subsets(&pool[idx + 1..], len - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    for n in 0..=5usize {
        for m in 0..=5usize {
            let mut values = BTreeSet::new();
            let mut words = 0usize;
            for t in 0..=n {
                let c = n - t; // size after the τ factors
                let tau_pool: Vec<usize> = (0..n).collect();
                for taus in subsets(&tau_pool, t) {
                    let max_s = c.saturating_sub(1);
                    for s in 0..=max_s {
                        if c > m + s {
                            continue; // r = m - (c - s) would be negative
                        }
                        let r = m - (c - s);
                        let sigma_pool: Vec<usize> = (0..c.saturating_sub(1)).collect();
                        let delta_pool: Vec<usize> = (0..m).collect();
                        for sigmas in subsets(&sigma_pool, s) {
                            for deltas in subsets(&delta_pool, r) {
                                let canonical = CanonicalWord::from_parts(
                                    n,
                                    deltas.clone(),
                                    sigmas.clone(),
                                    taus.clone(),
                                )
                                .expect("index lists within range always type");
                                words += 1;
                                assert!(
                                    values.insert(canonical.eval()),
                                    "two canonical words share a value: {canonical}"
                                );
                            }
                        }
                    }
                }
            }
            let homset: BTreeSet<PMap> = enumerate_hom(n, m, HomFlavor::Pi).into_iter().collect();
            assert_eq!(values, homset, "canonical words miss maps at ({n},{m})");
            assert_eq!(words, homset.len());
        }
    }
}

#[test]
fn one_sided_membership_matches_index_shape_up_to_size_5() {
    for n in 0..=5usize {
        for m in 0..=5usize {
            for f in enumerate_hom(n, m, HomFlavor::Pi) {
                let canonical = canonical_form(&f);
                let taus = canonical.taus();
                let consecutive = taus.windows(2).all(|w| w[1] == w[0] + 1);
                let ends_at_top = taus.last().map_or(true, |&k| k + 1 == n);
                let starts_at_zero = taus.first().map_or(true, |&k| k == 0);
                assert_eq!(f.in_flavor(HomFlavor::PiL), consecutive && ends_at_top, "{f}");
                assert_eq!(f.in_flavor(HomFlavor::PiR), consecutive && starts_at_zero, "{f}");
            }
        }
    }
}

/// A well-typed random word: pick factors front-to-back, tracking the
/// intermediate size, never exceeding `max_ordinal`.
pub fn random_word(rng: &mut impl Rng, max_len: usize, max_ordinal: usize) -> GenWord {
    let domain = rng.random_range(0..=max_ordinal);
    let len = rng.random_range(0..=max_len);
    let mut factors: Vec<Generator> = Vec::with_capacity(len);
    let mut size = domain; // size seen by the next factor (applied earlier)
    for _ in 0..len {
        let mut choices: Vec<Generator> = Vec::new();
        if size < max_ordinal {
            choices.extend((0..=size).map(Generator::delta));
        }
        if size >= 2 {
            choices.extend((0..size - 1).map(Generator::sigma));
        }
        if size >= 1 {
            choices.extend((0..size).map(Generator::tau));
        }
        if choices.is_empty() {
            break;
        }
        let factor = choices[rng.random_range(0..choices.len())];
        factors.push(factor);
        size = match factor.kind {
            GenKind::Delta => size + 1,
            GenKind::Sigma | GenKind::Tau => size - 1,
        };
    }
    factors.reverse(); // built application-order, stored composition-order
    GenWord::new(domain, factors).expect("factors chosen within type bounds")
}

#[test]
fn normalizer_agrees_with_canonical_form_on_seeded_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5149_0001);
    for _ in 0..2_000 {
        let word = random_word(&mut rng, 10, 6);
        let normalized = normalize(&word).expect("within step budget");
        let direct = canonical_form(&word.eval());
        assert_eq!(normalized, direct, "normalizer disagrees on {word}");
    }
}

proptest! {
    /// Parse/render round-trip on arbitrary rendered words.
    #[test]
    fn parse_render_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = random_word(&mut rng, 8, 5);
        let rendered = word.to_string();
        let reparsed: GenWord = rendered.parse().unwrap();
        prop_assert_eq!(word, reparsed);
    }

    /// Composing words corresponds to composing values.
    #[test]
    fn eval_is_functorial(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inner = random_word(&mut rng, 6, 5);
        // Build an outer word whose domain is the inner codomain.
        let outer = {
            let mut w = random_word(&mut rng, 6, 5);
            let mut guard = 0;
            while w.domain() != inner.codomain() && guard < 200 {
                w = random_word(&mut rng, 6, 5);
                guard += 1;
            }
            w
        };
        if outer.domain() == inner.codomain() {
            let mut factors = outer.factors().to_vec();
            factors.extend_from_slice(inner.factors());
            let glued = GenWord::new(inner.domain(), factors).unwrap();
            prop_assert_eq!(glued.eval(), outer.eval().compose(&inner.eval()).unwrap());
        }
    }
}
