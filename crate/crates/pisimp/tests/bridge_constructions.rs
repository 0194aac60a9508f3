//! Construction-level oracles for the algebra, Kleisli, and module
//! categories, and for the truncated cone checks.

use std::sync::Arc;

use pisimp::bridge::{
    cone_check, cone_from_pair, cone_from_subeq, coeq_category, em_category, hom_category,
    kleisli_category, subeq_category, SubeqObject,
};
use pisimp::bridge::opposite::{
    check_coeq_op_duality, check_hom_op_duality, check_subeq_op_duality,
};
use pisimp::fincat::{enumerate_monads, Budget, FinFunctor, Monad, NatTrans};
use pisimp::fixtures::{
    chain, closure_chain3, closure_diamond, empty, identity_parallel, parallel_pair, terminal,
    twist,
};

fn budget() -> Budget {
    Budget::default()
}

/// Fixed-point count straight off the endofunctor table: the independent
/// oracle for algebra counts over poset monads.
fn fixed_points(m: &Monad) -> usize {
    (0..m.cat().n_objects()).filter(|&o| m.t().apply_obj(o) == o).count()
}

#[test]
fn em_category_of_the_running_example() {
    let m = closure_chain3();
    let em = em_category(&m);
    assert_eq!(em.cat.n_objects(), 2);
    assert_eq!(em.cat.n_morphisms(), 3);
    assert_eq!(em.cat.n_objects(), fixed_points(&m));
    // Carriers are the closed elements 1 and 2.
    let carriers: Vec<&str> =
        em.algebras.iter().map(|a| m.cat().object_name(a.carrier)).collect();
    assert_eq!(carriers, ["1", "2"]);
}

#[test]
fn em_category_of_identity_monads_recovers_the_base() {
    for cat in [chain(3), parallel_pair(), twist()] {
        let m = Monad::identity_monad(&cat);
        let em = em_category(&m);
        assert_eq!(em.cat.n_objects(), cat.n_objects());
        assert_eq!(em.cat.n_morphisms(), cat.n_morphisms());
    }
}

#[test]
fn kleisli_category_of_the_running_example() {
    let m = closure_chain3();
    let kl = kleisli_category(&m);
    assert_eq!(kl.cat.n_objects(), 3);
    assert_eq!(kl.cat.n_morphisms(), 7);
    // Independent hom-count: |Kl(a, b)| = |C(a, T(b))|.
    let c = m.cat();
    for a in 0..c.n_objects() {
        for b in 0..c.n_objects() {
            let expected = c.hom(a, m.t().apply_obj(b)).len();
            let a_kl = kl.cat.obj_id(c.object_name(a)).unwrap();
            let b_kl = kl.cat.obj_id(c.object_name(b)).unwrap();
            assert_eq!(kl.cat.hom(a_kl, b_kl).len(), expected);
        }
    }
    // The embedding is identity on objects.
    assert!((0..c.n_objects()).all(|o| kl.embed.apply_obj(o) == o));
}

#[test]
fn kleisli_category_of_identity_monads_recovers_the_base() {
    for cat in [chain(3), twist()] {
        let m = Monad::identity_monad(&cat);
        let kl = kleisli_category(&m);
        assert_eq!(kl.cat.n_objects(), cat.n_objects());
        assert_eq!(kl.cat.n_morphisms(), cat.n_morphisms());
    }
}

#[test]
fn subeq_sizes_on_the_running_example() {
    let m = closure_chain3();
    // Terminal probe: a choice of closed element; squares follow the order.
    let sub = subeq_category(&m, &terminal(), budget()).unwrap();
    assert_eq!(sub.cat.n_objects(), 2);
    assert_eq!(sub.cat.n_morphisms(), 3);
    // Empty probe: exactly the empty functor and its identity.
    let sub = subeq_category(&m, &empty(), budget()).unwrap();
    assert_eq!(sub.cat.n_objects(), 1);
    assert_eq!(sub.cat.n_morphisms(), 1);
    // Chain-2 probe: pairs of closed elements in order.
    let sub = subeq_category(&m, &chain(2), budget()).unwrap();
    assert_eq!(sub.cat.n_objects(), 3);
    assert_eq!(sub.cat.n_morphisms(), 6);
}

#[test]
fn subeq_of_identity_monad_is_the_functor_category() {
    for x in [chain(2), parallel_pair()] {
        let m = Monad::identity_monad(&chain(3));
        let sub = subeq_category(&m, &x, budget()).unwrap();
        let hom = hom_category(&x, &chain(3), budget()).unwrap();
        assert_eq!(sub.cat.n_objects(), hom.cat.n_objects());
        assert_eq!(sub.cat.n_morphisms(), hom.cat.n_morphisms());
        // The structure cell is forced to be the identity.
        assert!(sub.objects.iter().all(|s| {
            s.xi.components()
                .iter()
                .enumerate()
                .all(|(o, &c)| c == chain(3).identity_of(s.u.apply_obj(o)))
        }));
    }
}

#[test]
fn coeq_sizes() {
    let m = closure_chain3();
    // Terminal probe: the unique functor with its unique cell.
    let coeq = coeq_category(&m, &terminal(), budget()).unwrap();
    assert_eq!(coeq.cat.n_objects(), 1);
    assert_eq!(coeq.cat.n_morphisms(), 1);
    // Identity monad: the whole functor category out of the base.
    let id = Monad::identity_monad(&chain(3));
    for x in [chain(2), parallel_pair()] {
        let coeq = coeq_category(&id, &x, budget()).unwrap();
        let hom = hom_category(&chain(3), &x, budget()).unwrap();
        assert_eq!(coeq.cat.n_objects(), hom.cat.n_objects());
        assert_eq!(coeq.cat.n_morphisms(), hom.cat.n_morphisms());
    }
}

#[test]
fn hom_category_shapes() {
    // Cat(1, C) ≅ C.
    let hom = hom_category(&terminal(), &chain(3), budget()).unwrap();
    assert_eq!(hom.cat.n_objects(), 3);
    assert_eq!(hom.cat.n_morphisms(), 6);
    // Cat(X, 1) ≅ 1.
    let hom = hom_category(&parallel_pair(), &terminal(), budget()).unwrap();
    assert_eq!(hom.cat.n_objects(), 1);
    assert_eq!(hom.cat.n_morphisms(), 1);
    // Cat(chain2, chain3): monotone pairs and pointwise order.
    let hom = hom_category(&chain(2), &chain(3), budget()).unwrap();
    assert_eq!(hom.cat.n_objects(), 6);
    assert_eq!(hom.cat.n_morphisms(), 20);
}

#[test]
fn cones_pass_for_every_subequalizing_pair() {
    for (monad, probe) in [
        (closure_chain3(), terminal()),
        (closure_chain3(), chain(2)),
        (closure_diamond(), terminal()),
        (identity_parallel(), parallel_pair()),
    ] {
        let sub = subeq_category(&monad, &probe, budget()).unwrap();
        assert!(!sub.objects.is_empty());
        for s in &sub.objects {
            let cone = cone_from_subeq(&monad, s, 4);
            let report = cone_check(&monad, &cone);
            assert!(report.holds, "cone failed: {:?}", report.failures);
            assert!(report.key_unit && report.key_mult);
            assert!(report.functoriality_instances > 1000);
        }
    }
}

#[test]
fn mutated_structure_cell_fails_the_unit_instance() {
    // A collapse monad on the twist category with η_b = id: taking ξ = w
    // breaks ξ∘η = 1 while still being a natural candidate over the
    // terminal probe.
    let monads = enumerate_monads(&twist(), budget()).unwrap();
    let cat = twist();
    let b = cat.obj_id("b").unwrap();
    let w = cat.mor_id("w").unwrap();
    let monad = monads
        .iter()
        .find(|m| {
            !m.t().is_identity_functor()
                && m.t().apply_obj(cat.obj_id("a").unwrap()) == b
                && m.eta().component(b) == cat.identity_of(b)
        })
        .expect("a collapse monad with identity unit at b exists");

    let x = terminal();
    let u = FinFunctor::new(Arc::clone(&x), Arc::clone(&cat), vec![b], vec![cat.identity_of(b)])
        .unwrap();
    let tu = u.then(monad.t());
    let xi_bad = NatTrans::new(tu.clone(), u.clone(), vec![w]).unwrap();
    assert!(SubeqObject::new(monad, u.clone(), xi_bad.clone()).is_err());

    let cone = cone_from_pair(monad, &u, &xi_bad, 4);
    let report = cone_check(monad, &cone);
    assert!(!report.holds);
    assert!(!report.key_unit, "the unit instance must be the cited failure");
    assert!(report.failures.iter().any(|f| f.instance == "t0.d0 @0"));

    // The honest structure cell passes.
    let xi_good = NatTrans::new(tu, u.clone(), vec![cat.identity_of(b)]).unwrap();
    assert!(SubeqObject::new(monad, u.clone(), xi_good.clone()).is_ok());
    let cone = cone_from_pair(monad, &u, &xi_good, 4);
    assert!(cone_check(monad, &cone).holds);
}

#[test]
fn depth_one_cone_data_recovers_the_pair() {
    // Reading (U, ξ) back off a valid cone's level-0 and top-τ data gives
    // a subequalizing pair; conversely candidate pairs failing the
    // equations yield cones that fail the check. Together these are the
    // two directions of the determination argument.
    let monad = closure_chain3();
    let x = terminal();
    let sub = subeq_category(&monad, &x, budget()).unwrap();
    for s in &sub.objects {
        let cone = cone_from_subeq(&monad, s, 2);
        let u = cone.levels[0].clone();
        let xi = cone.tau_tops[0].clone();
        assert_eq!(&u, &s.u);
        assert!(SubeqObject::new(&monad, u, xi).is_ok());
    }
    // Exhaustively: candidate pairs pass cone_check at depth 2 iff they
    // satisfy the two equations.
    let functors = pisimp::fincat::enumerate_functors(&x, monad.cat(), budget()).unwrap();
    for u in functors {
        let tu = u.then(monad.t());
        for xi in pisimp::fincat::enumerate_nats(&tu, &u, budget()).unwrap() {
            let valid = SubeqObject::new(&monad, u.clone(), xi.clone()).is_ok();
            let cone = cone_from_pair(&monad, &u, &xi, 2);
            assert_eq!(cone_check(&monad, &cone).holds, valid);
        }
    }
}

#[test]
fn opposite_involution_and_hom_duality() {
    for cat in [chain(3), twist(), parallel_pair()] {
        assert_eq!(*cat.opposite().opposite(), *cat);
    }
    assert!(check_hom_op_duality(&chain(2), &chain(3), budget()).unwrap());
    assert!(check_hom_op_duality(&parallel_pair(), &twist(), budget()).unwrap());
}

#[test]
fn module_categories_rederive_through_opposites() {
    let monads = enumerate_monads(&twist(), budget()).unwrap();
    let nontrivial = monads.iter().find(|m| !m.t().is_identity_functor()).unwrap();
    for monad in [&closure_chain3(), nontrivial] {
        for probe in [terminal(), chain(2)] {
            let sub = check_subeq_op_duality(monad, &probe, budget()).unwrap();
            assert!(sub.holds(), "subeq op duality: {sub:?}");
            let coeq = check_coeq_op_duality(monad, &probe, budget()).unwrap();
            assert!(coeq.holds(), "coeq op duality: {coeq:?}");
        }
    }
}
