//! The two certified comparisons: functor categories into the algebra
//! category against subequalizing pairs, and functor categories out of the
//! Kleisli category against coequalizing pairs.
//!
//! A comparison is a *certificate*: it records explicit object and
//! morphism bijections per probe, checks that the mapping and its inverse
//! are functors, checks naturality against every supplied probe functor,
//! and on the algebra side re-checks every subequalizing pair as a
//! truncated cone. Reports serialize to JSON with stable field order.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::category::FinCat;
use crate::fincat::enumerate::{Budget, SearchError};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;
use crate::fincat::nat::NatTrans;

use super::cone::{cone_check, cone_from_subeq};
use super::em::em_category;
use super::hom::{hom_category, HomCategory};
use super::kleisli::kleisli_category;
use super::module_cat::{coeq_category, subeq_category};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SideSizes {
    pub objects: usize,
    pub morphisms: usize,
}

/// Comparison outcome over one probe category.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeComparison {
    pub probe: String,
    pub hom_side: SideSizes,
    pub module_side: SideSizes,
    pub object_bijection: Vec<(String, String)>,
    pub morphism_bijection: Vec<(String, String)>,
    pub bijective: bool,
    pub functorial: bool,
    pub inverse_functorial: bool,
    /// Cone checks per subequalizing pair (algebra side only):
    /// `(object id, holds)`.
    pub cone_checks: Vec<(String, bool)>,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Naturality of the comparison against one probe functor.
#[derive(Debug, Clone, Serialize)]
pub struct NaturalityCheck {
    pub functor: String,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// The full comparison certificate.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub schema: String,
    pub kind: String,
    pub monad: String,
    pub depth: usize,
    pub probes: Vec<ProbeComparison>,
    pub naturality: Vec<NaturalityCheck>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

pub const REPORT_SCHEMA: &str = "pisimp.report/1";

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} comparison: {} (depth {})", self.kind, self.monad, self.depth)?;
        for warning in &self.warnings {
            writeln!(f, "warning: {warning}")?;
        }
        for probe in &self.probes {
            writeln!(
                f,
                "probe {}: hom {} obj / {} mor | module {} obj / {} mor | bijective {} | functorial {} | inverse {}{} | {}",
                probe.probe,
                probe.hom_side.objects,
                probe.hom_side.morphisms,
                probe.module_side.objects,
                probe.module_side.morphisms,
                yes_no(probe.bijective),
                yes_no(probe.functorial),
                yes_no(probe.inverse_functorial),
                if probe.cone_checks.is_empty() {
                    String::new()
                } else {
                    format!(
                        " | cones {}/{}",
                        probe.cone_checks.iter().filter(|(_, ok)| *ok).count(),
                        probe.cone_checks.len()
                    )
                },
                pass_fail(probe.pass),
            )?;
            for failure in &probe.failures {
                writeln!(f, "  failure: {failure}")?;
            }
        }
        for check in &self.naturality {
            writeln!(f, "naturality {}: {}", check.functor, pass_fail(check.pass))?;
            for failure in &check.failures {
                writeln!(f, "  failure: {failure}")?;
            }
        }
        writeln!(f, "overall: {}", pass_fail(self.pass))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

/// A probe functor between two members of the probe list.
#[derive(Debug, Clone)]
pub struct ProbeFunctor {
    pub from: usize,
    pub to: usize,
    pub label: String,
    pub functor: FinFunctor,
}

/// The mapping data of one side of a comparison over one probe.
struct ProbeSide {
    hom: HomCategory,
    /// hom-object index → module-object index
    obj_to_module: Vec<Option<usize>>,
    /// hom-morphism index → module-morphism index
    mor_to_module: Vec<Option<usize>>,
    module_cat: Arc<FinCat>,
}

fn certify_probe(
    probe_name: &str,
    side: &ProbeSide,
    cone_checks: Vec<(String, bool)>,
) -> ProbeComparison {
    let mut failures = Vec::new();
    let hom = &side.hom;
    let module_cat = &side.module_cat;
    let hom_sizes =
        SideSizes { objects: hom.cat.n_objects(), morphisms: hom.cat.n_morphisms() };
    let module_sizes =
        SideSizes { objects: module_cat.n_objects(), morphisms: module_cat.n_morphisms() };

    // Totality and injectivity on both levels, then counts give bijectivity.
    let mut bijective = true;
    let mut seen_obj = vec![false; module_cat.n_objects()];
    for (v, image) in side.obj_to_module.iter().enumerate() {
        match image {
            None => {
                bijective = false;
                failures.push(format!("object {} has no module image", hom.cat.object_name(v)));
            }
            Some(i) => {
                if std::mem::replace(&mut seen_obj[*i], true) {
                    bijective = false;
                    failures.push(format!("module object {i} hit twice"));
                }
            }
        }
    }
    let mut seen_mor = vec![false; module_cat.n_morphisms()];
    for (m, image) in side.mor_to_module.iter().enumerate() {
        match image {
            None => {
                bijective = false;
                failures.push(format!("morphism {} has no module image", hom.cat.morphism(m).id));
            }
            Some(i) => {
                if std::mem::replace(&mut seen_mor[*i], true) {
                    bijective = false;
                    failures.push(format!("module morphism {i} hit twice"));
                }
            }
        }
    }
    if hom_sizes.objects != module_sizes.objects || hom_sizes.morphisms != module_sizes.morphisms {
        bijective = false;
        failures.push(format!(
            "size mismatch: hom {}/{} vs module {}/{}",
            hom_sizes.objects, hom_sizes.morphisms, module_sizes.objects, module_sizes.morphisms
        ));
    }

    // Functoriality of the mapping.
    let mut functorial = bijective;
    if bijective {
        for o in 0..hom.cat.n_objects() {
            let id_image = side.mor_to_module[hom.cat.identity_of(o)].unwrap();
            let obj_image = side.obj_to_module[o].unwrap();
            if module_cat.identity_of(obj_image) != id_image {
                functorial = false;
                failures.push(format!("identity of {} not preserved", hom.cat.object_name(o)));
            }
        }
        for g in 0..hom.cat.n_morphisms() {
            for f in 0..hom.cat.n_morphisms() {
                if let Some(gf) = hom.cat.compose(g, f) {
                    let lhs = side.mor_to_module[gf].unwrap();
                    let rhs = module_cat
                        .compose(side.mor_to_module[g].unwrap(), side.mor_to_module[f].unwrap());
                    if rhs != Some(lhs) {
                        functorial = false;
                        failures.push(format!(
                            "composite of ({}, {}) not preserved",
                            hom.cat.morphism(g).id,
                            hom.cat.morphism(f).id
                        ));
                    }
                }
            }
        }
    }

    // Functoriality of the inverse mapping.
    let mut inverse_functorial = bijective;
    if bijective {
        let mut inv_mor = vec![usize::MAX; module_cat.n_morphisms()];
        for (m, image) in side.mor_to_module.iter().enumerate() {
            inv_mor[image.unwrap()] = m;
        }
        for g in 0..module_cat.n_morphisms() {
            for f in 0..module_cat.n_morphisms() {
                if let Some(gf) = module_cat.compose(g, f) {
                    let rhs = hom.cat.compose(inv_mor[g], inv_mor[f]);
                    if rhs != Some(inv_mor[gf]) {
                        inverse_functorial = false;
                        failures.push(format!("inverse breaks composite of module pair ({g}, {f})"));
                    }
                }
            }
        }
    }

    let cones_ok = cone_checks.iter().all(|(_, ok)| *ok);
    for (id, ok) in &cone_checks {
        if !ok {
            failures.push(format!("cone check failed for {id}"));
        }
    }

    let object_bijection = side
        .obj_to_module
        .iter()
        .enumerate()
        .filter_map(|(v, image)| {
            image.map(|i| {
                (hom.cat.object_name(v).to_string(), module_cat.object_name(i).to_string())
            })
        })
        .collect();
    let morphism_bijection = side
        .mor_to_module
        .iter()
        .enumerate()
        .filter_map(|(m, image)| {
            image.map(|i| (hom.cat.morphism(m).id.clone(), module_cat.morphism(i).id.clone()))
        })
        .collect();

    let pass = bijective && functorial && inverse_functorial && cones_ok;
    ProbeComparison {
        probe: probe_name.to_string(),
        hom_side: hom_sizes,
        module_side: module_sizes,
        object_bijection,
        morphism_bijection,
        bijective,
        functorial,
        inverse_functorial,
        cone_checks,
        pass,
        failures,
    }
}

/// Certifies `Cat(X, EM(T)) ≅ Subeq_T(X)` over every probe, naturally in
/// the probe, with every subequalizing pair re-checked as a truncated cone
/// at the given depth.
pub fn em_comparison(
    monad: &Monad,
    label: &str,
    probes: &[(String, Arc<FinCat>)],
    probe_functors: &[ProbeFunctor],
    depth: usize,
    budget: Budget,
) -> Result<ComparisonReport, SearchError> {
    let em = em_category(monad);
    let mut warnings = Vec::new();
    if probes.is_empty() {
        warnings.push("empty probe list: vacuous pass".to_string());
    }

    let mut sides = Vec::new();
    let mut subs = Vec::new();
    for (_, x) in probes {
        let hom = hom_category(x, &em.cat, budget)?;
        let sub = subeq_category(monad, x, budget)?;

        let obj_to_module: Vec<Option<usize>> = hom
            .objects
            .iter()
            .map(|v| {
                let u = v.then(&em.forgetful);
                let components: Vec<usize> =
                    (0..x.n_objects()).map(|o| em.algebras[v.apply_obj(o)].action).collect();
                let xi = NatTrans::new(u.then(monad.t()), u.clone(), components).ok()?;
                sub.object_index(&u, &xi)
            })
            .collect();
        let mor_to_module: Vec<Option<usize>> = hom
            .morphisms
            .iter()
            .enumerate()
            .map(|(k, nu)| {
                let src = hom.cat.morphism(k).src;
                let tgt = hom.cat.morphism(k).tgt;
                let nu0 = NatTrans::whisker_left(&em.forgetful, nu).ok()?;
                sub.morphism_index(obj_to_module[src]?, obj_to_module[tgt]?, &nu0)
            })
            .collect();
        sides.push(ProbeSide { hom, obj_to_module, mor_to_module, module_cat: Arc::clone(&sub.cat) });
        subs.push(sub);
    }

    let mut probe_reports = Vec::new();
    for (k, (name, _)) in probes.iter().enumerate() {
        let cone_checks: Vec<(String, bool)> = subs[k]
            .objects
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let cone = cone_from_subeq(monad, s, depth);
                (subs[k].cat.object_name(i).to_string(), cone_check(monad, &cone).holds)
            })
            .collect();
        probe_reports.push(certify_probe(name, &sides[k], cone_checks));
    }

    // Naturality: a probe functor G : X_from → X_to pulls the hom side
    // back by precomposition and the module side back by whiskering; the
    // square of mappings must commute.
    let mut naturality = Vec::new();
    for pf in probe_functors {
        let mut failures = Vec::new();
        let from = &sides[pf.from];
        let to = &sides[pf.to];
        for (v, functor) in to.hom.objects.iter().enumerate() {
            let pulled = pf.functor.then(functor);
            let Some(vi) = from.hom.object_index(&pulled) else {
                failures.push(format!("pullback of object {v} missing from hom side"));
                continue;
            };
            let (Some(via_hom), Some(to_module)) = (from.obj_to_module[vi], to.obj_to_module[v])
            else {
                continue;
            };
            let target = &subs[pf.to].objects[to_module];
            let transported_u = pf.functor.then(&target.u);
            let transported_xi = NatTrans::whisker_right(&target.xi, &pf.functor)
                .expect("probe functor whiskers the structure cell");
            match subs[pf.from].object_index(&transported_u, &transported_xi) {
                Some(direct) if direct == via_hom => {}
                other => failures.push(format!(
                    "object square breaks at hom object {v}: via hom {via_hom:?}, via module {other:?}"
                )),
            }
        }
        for (k, nu) in to.hom.morphisms.iter().enumerate() {
            let pulled = NatTrans::whisker_right(nu, &pf.functor)
                .expect("probe functor whiskers 2-cells");
            let Some(ki) = from.hom.morphism_index(&pulled) else {
                failures.push(format!("pullback of morphism {k} missing from hom side"));
                continue;
            };
            let (Some(via_hom), Some(to_module)) = (from.mor_to_module[ki], to.mor_to_module[k])
            else {
                continue;
            };
            let target = &subs[pf.to].morphisms[to_module];
            let transported = NatTrans::whisker_right(&target.nu, &pf.functor)
                .expect("probe functor whiskers squares");
            let src = subs[pf.from]
                .object_index(
                    &pf.functor.then(&subs[pf.to].objects[target.source].u),
                    &NatTrans::whisker_right(&subs[pf.to].objects[target.source].xi, &pf.functor)
                        .expect("whiskers"),
                )
                .unwrap_or(usize::MAX);
            let tgt = subs[pf.from]
                .object_index(
                    &pf.functor.then(&subs[pf.to].objects[target.target].u),
                    &NatTrans::whisker_right(&subs[pf.to].objects[target.target].xi, &pf.functor)
                        .expect("whiskers"),
                )
                .unwrap_or(usize::MAX);
            match subs[pf.from].morphism_index(src, tgt, &transported) {
                Some(direct) if direct == via_hom => {}
                other => failures.push(format!(
                    "morphism square breaks at hom morphism {k}: via hom {via_hom:?}, via module {other:?}"
                )),
            }
        }
        naturality.push(NaturalityCheck {
            functor: pf.label.clone(),
            pass: failures.is_empty(),
            failures,
        });
    }

    let pass = probe_reports.iter().all(|p| p.pass) && naturality.iter().all(|n| n.pass);
    Ok(ComparisonReport {
        schema: REPORT_SCHEMA.to_string(),
        kind: "eilenberg-moore".to_string(),
        monad: label.to_string(),
        depth,
        probes: probe_reports,
        naturality,
        warnings,
        pass,
    })
}

/// Certifies `Cat(Kl(T), X) ≅ Coeq_T(X)` over every probe, naturally in
/// the probe.
pub fn kleisli_comparison(
    monad: &Monad,
    label: &str,
    probes: &[(String, Arc<FinCat>)],
    probe_functors: &[ProbeFunctor],
    depth: usize,
    budget: Budget,
) -> Result<ComparisonReport, SearchError> {
    let kl = kleisli_category(monad);
    let base = monad.cat();
    let mut warnings = Vec::new();
    if probes.is_empty() {
        warnings.push("empty probe list: vacuous pass".to_string());
    }

    let mut sides = Vec::new();
    let mut coeqs = Vec::new();
    for (_, x) in probes {
        let hom = hom_category(&kl.cat, x, budget)?;
        let coeq = coeq_category(monad, x, budget)?;

        let obj_to_module: Vec<Option<usize>> = hom
            .objects
            .iter()
            .map(|h| {
                let f = kl.embed.then(h);
                let components: Vec<usize> =
                    (0..base.n_objects()).map(|c| h.apply_mor(kl.kappa(monad, c))).collect();
                let zeta = NatTrans::new(monad.t().then(&f), f.clone(), components).ok()?;
                coeq.object_index(&f, &zeta)
            })
            .collect();
        let mor_to_module: Vec<Option<usize>> = hom
            .morphisms
            .iter()
            .enumerate()
            .map(|(k, rho)| {
                let src = hom.cat.morphism(k).src;
                let tgt = hom.cat.morphism(k).tgt;
                let nu = NatTrans::whisker_right(rho, &kl.embed).ok()?;
                coeq.morphism_index(obj_to_module[src]?, obj_to_module[tgt]?, &nu)
            })
            .collect();
        sides.push(ProbeSide { hom, obj_to_module, mor_to_module, module_cat: Arc::clone(&coeq.cat) });
        coeqs.push(coeq);
    }

    let mut probe_reports = Vec::new();
    for (k, (name, _)) in probes.iter().enumerate() {
        probe_reports.push(certify_probe(name, &sides[k], Vec::new()));
    }

    // Naturality: a probe functor G : X_from → X_to pushes the hom side
    // forward by postcomposition and the module side by whiskering on the
    // other flank.
    let mut naturality = Vec::new();
    for pf in probe_functors {
        let mut failures = Vec::new();
        let from = &sides[pf.from];
        let to = &sides[pf.to];
        for (v, functor) in from.hom.objects.iter().enumerate() {
            let pushed = functor.then(&pf.functor);
            let Some(vi) = to.hom.object_index(&pushed) else {
                failures.push(format!("pushforward of object {v} missing from hom side"));
                continue;
            };
            let (Some(via_hom), Some(from_module)) = (to.obj_to_module[vi], from.obj_to_module[v])
            else {
                continue;
            };
            let source = &coeqs[pf.from].objects[from_module];
            let transported_f = source.f.then(&pf.functor);
            let transported_zeta = NatTrans::whisker_left(&pf.functor, &source.zeta)
                .expect("probe functor applies to the structure cell");
            match coeqs[pf.to].object_index(&transported_f, &transported_zeta) {
                Some(direct) if direct == via_hom => {}
                other => failures.push(format!(
                    "object square breaks at hom object {v}: via hom {via_hom:?}, via module {other:?}"
                )),
            }
        }
        for (k, rho) in from.hom.morphisms.iter().enumerate() {
            let pushed = NatTrans::whisker_left(&pf.functor, rho)
                .expect("probe functor applies to 2-cells");
            let Some(ki) = to.hom.morphism_index(&pushed) else {
                failures.push(format!("pushforward of morphism {k} missing from hom side"));
                continue;
            };
            let (Some(via_hom), Some(from_module)) = (to.mor_to_module[ki], from.mor_to_module[k])
            else {
                continue;
            };
            let source = &coeqs[pf.from].morphisms[from_module];
            let transported = NatTrans::whisker_left(&pf.functor, &source.nu)
                .expect("probe functor applies to squares");
            let src = coeqs[pf.to]
                .object_index(
                    &coeqs[pf.from].objects[source.source].f.then(&pf.functor),
                    &NatTrans::whisker_left(&pf.functor, &coeqs[pf.from].objects[source.source].zeta)
                        .expect("whiskers"),
                )
                .unwrap_or(usize::MAX);
            let tgt = coeqs[pf.to]
                .object_index(
                    &coeqs[pf.from].objects[source.target].f.then(&pf.functor),
                    &NatTrans::whisker_left(&pf.functor, &coeqs[pf.from].objects[source.target].zeta)
                        .expect("whiskers"),
                )
                .unwrap_or(usize::MAX);
            match coeqs[pf.to].morphism_index(src, tgt, &transported) {
                Some(direct) if direct == via_hom => {}
                other => failures.push(format!(
                    "morphism square breaks at hom morphism {k}: via hom {via_hom:?}, via module {other:?}"
                )),
            }
        }
        naturality.push(NaturalityCheck {
            functor: pf.label.clone(),
            pass: failures.is_empty(),
            failures,
        });
    }

    let pass = probe_reports.iter().all(|p| p.pass) && naturality.iter().all(|n| n.pass);
    Ok(ComparisonReport {
        schema: REPORT_SCHEMA.to_string(),
        kind: "kleisli".to_string(),
        monad: label.to_string(),
        depth,
        probes: probe_reports,
        naturality,
        warnings,
        pass,
    })
}
