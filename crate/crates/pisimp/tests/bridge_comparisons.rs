//! End-to-end comparison certificates over the default probe set.

use pisimp::bridge::{em_comparison, kleisli_comparison};
use pisimp::fincat::{enumerate_monads, Budget, Monad};
use pisimp::fixtures::{
    chain, closure_chain2, closure_chain3, closure_diamond, default_probes, identity_parallel,
    probe_functors_between, twist,
};

#[test]
fn both_comparisons_pass_for_every_bundled_monad() {
    let budget = Budget::default();
    let probes = default_probes();
    let probe_functors = probe_functors_between(&probes, budget).unwrap();
    assert!(!probe_functors.is_empty());

    let mut monads: Vec<(String, Monad)> = vec![
        ("closure_chain2".into(), closure_chain2()),
        ("closure_chain3".into(), closure_chain3()),
        ("closure_diamond".into(), closure_diamond()),
        ("identity_parallel".into(), identity_parallel()),
        ("identity_chain3".into(), Monad::identity_monad(&chain(3))),
    ];
    for (k, m) in enumerate_monads(&twist(), budget).unwrap().into_iter().enumerate() {
        monads.push((format!("twist_monad{k}"), m));
    }

    for (label, monad) in &monads {
        let em = em_comparison(monad, label, &probes, &probe_functors, 4, budget).unwrap();
        assert!(em.pass, "{label} em comparison failed:\n{em}");
        let kl = kleisli_comparison(monad, label, &probes, &probe_functors, 4, budget).unwrap();
        assert!(kl.pass, "{label} kleisli comparison failed:\n{kl}");
    }
}

#[test]
fn running_example_sizes_match_on_the_terminal_probe() {
    let budget = Budget::default();
    let probes = default_probes();
    let report =
        em_comparison(&closure_chain3(), "closure_chain3", &probes, &[], 4, budget).unwrap();
    let terminal_probe = report.probes.iter().find(|p| p.probe == "terminal").unwrap();
    assert_eq!(terminal_probe.hom_side.objects, 2);
    assert_eq!(terminal_probe.module_side.objects, 2);
    assert_eq!(terminal_probe.hom_side.morphisms, 3);
    assert!(terminal_probe.pass);
    assert_eq!(terminal_probe.cone_checks.len(), 2);
}

#[test]
fn empty_probe_list_is_a_vacuous_pass_with_warning() {
    let budget = Budget::default();
    let report = kleisli_comparison(&closure_chain3(), "x", &[], &[], 4, budget).unwrap();
    assert!(report.pass);
    assert_eq!(report.warnings.len(), 1);
}

#[test]
fn report_serializes_deterministically() {
    let budget = Budget::default();
    let probes = default_probes();
    let probe_functors = probe_functors_between(&probes, budget).unwrap();
    let a = em_comparison(&closure_chain3(), "m", &probes, &probe_functors, 4, budget).unwrap();
    let b = em_comparison(&closure_chain3(), "m", &probes, &probe_functors, 4, budget).unwrap();
    assert_eq!(serde_json::to_string_pretty(&a).unwrap(), serde_json::to_string_pretty(&b).unwrap());
    assert_eq!(a.to_string(), b.to_string());
}
