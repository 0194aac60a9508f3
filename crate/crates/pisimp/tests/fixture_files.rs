//! The JSON fixture files shipped in `fixtures/` are generated from the
//! builders and the monad enumeration; this suite keeps them in sync.
//!
//! To regenerate after changing a builder:
//! `cargo test -p pisimp --test fixture_files -- --ignored regenerate`

use std::path::PathBuf;

use pisimp::fincat::fixture::{load_monad, monad_from_data, monad_to_data, MonadData};
use pisimp::fincat::{enumerate_monads, Budget, Monad};
use pisimp::fixtures::{closure_chain2, closure_chain3, closure_diamond, identity_parallel, twist};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Every bundled monad fixture, by file stem. The twist monads are the
/// machine-discovered enumeration, embedded in enumeration order.
fn bundled() -> Vec<(String, Monad)> {
    let mut out = vec![
        ("closure_chain2".to_string(), closure_chain2()),
        ("closure_chain3".to_string(), closure_chain3()),
        ("closure_diamond".to_string(), closure_diamond()),
        ("identity_parallel".to_string(), identity_parallel()),
    ];
    for (k, m) in enumerate_monads(&twist(), Budget::default()).unwrap().into_iter().enumerate() {
        out.push((format!("twist_monad{k}"), m));
    }
    out
}

/// The deliberately broken fixture: the collapse twist monad with identity
/// unit at `b`, its multiplication overwritten by the involution. The
/// family is still natural, but the left unit law fails at `a`.
fn broken_mu_data() -> MonadData {
    let cat = twist();
    let b = cat.obj_id("b").unwrap();
    let monad = enumerate_monads(&twist(), Budget::default())
        .unwrap()
        .into_iter()
        .find(|m| {
            !m.t().is_identity_functor()
                && m.t().apply_obj(cat.obj_id("a").unwrap()) == b
                && m.eta().component(b) == cat.identity_of(b)
        })
        .expect("collapse monad with identity unit at b");
    let mut data = monad_to_data(&monad);
    data.mu.insert("a".into(), "w".into());
    data.mu.insert("b".into(), "w".into());
    data
}

fn render(data: &MonadData) -> String {
    let mut text = serde_json::to_string_pretty(data).unwrap();
    text.push('\n');
    text
}

#[test]
fn fixture_files_match_builders() {
    for (stem, monad) in bundled() {
        let path = fixtures_dir().join(format!("{stem}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing fixture {}: {e}; regenerate", path.display()));
        assert_eq!(text, render(&monad_to_data(&monad)), "stale fixture {stem}");
        // Loading the file reproduces the builder's monad exactly.
        assert_eq!(load_monad(&path).unwrap(), monad);
    }
    let broken = std::fs::read_to_string(fixtures_dir().join("broken_mu_twist.json")).unwrap();
    assert_eq!(broken, render(&broken_mu_data()));
    // The broken fixture parses but fails monad validation on the laws.
    let data: MonadData = serde_json::from_str(&broken).unwrap();
    let err = monad_from_data(&data).unwrap_err();
    let message = err.to_string();
    assert!(message.contains("unit law"), "expected a unit-law citation, got: {message}");
}

#[test]
#[ignore = "writes the fixture files; run explicitly after changing builders"]
fn regenerate() {
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (stem, monad) in bundled() {
        std::fs::write(dir.join(format!("{stem}.json")), render(&monad_to_data(&monad))).unwrap();
    }
    std::fs::write(dir.join("broken_mu_twist.json"), render(&broken_mu_data())).unwrap();
}
