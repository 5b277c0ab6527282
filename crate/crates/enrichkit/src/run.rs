//! Command dispatch: every command turns a parsed input file (or a seed) into report records,
//! in declaration order.

use std::time::Instant;

use enrichkit_core::finset::maps_between;
use enrichkit_core::mfunctor::{audit_mfun_et, audit_mfun_tt, unit_automatism};
use enrichkit_core::presheaf::{audit_presheaf, check_fully_faithful, check_hom_objects, check_yoneda_lemma, enumerate_presheaves};
use enrichkit_core::wcolim::{canonical_presentation, check_equivalence, check_universal, post_compose, weighted_colimit, Weight};
use enrichkit_core::{Enriched, Ext, FinSets, LTensored, Limits, MCat, MFunET, SetEnriched, SkMap, SkSet, WCocone};
use rand::Rng;
use serde_json::json;

use crate::corpus;
use crate::report::{Record, Report};
use crate::spec::{BuildError, SpecFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Validate every declaration.
    Validate,
    /// Enumerate the presheaf category of every enriched category.
    Presheaves,
    /// Yoneda lemma, full faithfulness and hom-object search.
    Yoneda,
    /// Weighted colimits, universality, co-Yoneda and canonical presentations.
    Wcolim,
    /// The Ext/Res round trips and colimit preservation.
    Universal,
    /// Every check on a seeded random corpus.
    Fuzz,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Presheaves => "presheaves",
            Command::Yoneda => "yoneda",
            Command::Wcolim => "wcolim",
            Command::Universal => "universal",
            Command::Fuzz => "fuzz",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Keep only records whose check or instance has this name.
    pub check: Option<String>,
    pub seed: u64,
    pub limits: Limits,
    /// Random (M, A) pairs for the Yoneda part of `fuzz`.
    pub enriched_count: usize,
    /// Random diagrams, weights and presheaves for the colimit part of `fuzz`.
    pub colimit_count: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            check: None,
            seed: 0,
            limits: Limits::default(),
            enriched_count: 100,
            colimit_count: 20,
        }
    }
}

struct Runner<'a> {
    opts: &'a Options,
    records: Vec<Record>,
}

impl Runner<'_> {
    fn wants(&self, check: &str, instance: &str) -> bool {
        match &self.opts.check {
            None => true,
            Some(c) => c == check || c == instance,
        }
    }

    /// Adds a record that was computed and timed elsewhere.
    fn push(&mut self, r: Record) {
        if self.wants(&r.check, &r.instance) {
            self.records.push(r);
        }
    }

    fn record(&mut self, check: &str, instance: &str, body: impl FnOnce(Record) -> Record) {
        if !self.wants(check, instance) {
            return;
        }
        let start = Instant::now();
        let mut r = body(Record::new(check, instance));
        r.millis = start.elapsed().as_millis();
        self.records.push(r);
    }
}

fn core_error(r: Record, e: enrichkit_core::Error) -> Record {
    if e.is_size_bound() {
        r.cap(e.to_string())
    } else {
        r.failures([e.to_string()])
    }
}

fn build_error(r: Record, e: BuildError) -> Record {
    match e {
        BuildError::Invalid(e) => core_error(r, e),
        other => r.failures([other.to_string()]),
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn run(command: Command, spec: Option<&SpecFile>, opts: &Options) -> Report {
    let mut runner = Runner { opts, records: Vec::new() };
    let empty = SpecFile::default();
    let spec = spec.unwrap_or(&empty);
    match command {
        Command::Validate => validate(&mut runner, spec),
        Command::Presheaves => presheaves(&mut runner, spec),
        Command::Yoneda => yoneda(&mut runner, spec),
        Command::Wcolim => wcolim(&mut runner, spec),
        Command::Universal => universal(&mut runner, spec),
        Command::Fuzz => fuzz(&mut runner),
    }
    let seed = (command == Command::Fuzz).then_some(opts.seed);
    Report::new(command.name(), seed, runner.records)
}

fn validate(run: &mut Runner, spec: &SpecFile) {
    let limits = run.opts.limits;
    for name in spec.categories.keys() {
        run.record("category", name, |r| match spec.category(name, &limits) {
            Ok(c) => r.detail("objects", c.object_count()).detail("morphisms", c.morphism_count()),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.monoidal.keys() {
        run.record("monoidal", name, |r| match spec.monoidal(name, &limits) {
            Ok(m) => r
                .detail("objects", m.object_count())
                .detail("symmetric_on_objects", m.is_symmetric_on_objects()),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.enriched.keys() {
        run.record("enriched", name, |r| match spec.enriched(name, &limits) {
            Ok(a) => r.detail("objects", a.object_count()),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.modules.keys() {
        run.record("module", name, |r| match spec.module(name, &limits) {
            Ok(b) => r.detail("objects", b.carrier().object_count()),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.tensored_functors.keys() {
        run.record("tensored_functor", name, |r| match spec.tensored_functor(name, &limits) {
            Ok((s, t, f)) => r.failures(strings(audit_mfun_tt(&s, &t, &f))),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.mfunctors.keys() {
        run.record("mfunctor", name, |r| match spec.mfunctor(name, &limits) {
            Ok((a, b, f)) => r.failures(strings(audit_mfun_et(&a, &b, &f))),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.presheaves.keys() {
        run.record("presheaf", name, |r| match spec.presheaf(name, &limits) {
            Ok((a, p)) => r.failures(strings(audit_presheaf(&a, &p))),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.diagrams.keys() {
        run.record("diagram", name, |r| match spec.diagram(name, &limits) {
            Ok((a, f)) => r.failures(strings(audit_mfun_et(&a, &FinSets, &f))),
            Err(e) => build_error(r, e),
        });
    }
    for name in spec.weights.keys() {
        run.record("weight", name, |r| match spec.weight(name, &limits) {
            Ok((a, w)) => r.failures(strings(audit_presheaf(&a, &w))),
            Err(e) => build_error(r, e),
        });
    }
}

fn presheaves(run: &mut Runner, spec: &SpecFile) {
    let limits = run.opts.limits;
    for name in spec.enriched.keys() {
        run.record("presheaves", name, |r| {
            let a = match spec.enriched(name, &limits) {
                Ok(a) => a,
                Err(e) => return build_error(r, e),
            };
            match enumerate_presheaves(&a, &limits) {
                Ok(pc) => {
                    let c = a.base().carrier();
                    let values: Vec<Vec<&str>> = pc
                        .presheaves
                        .iter()
                        .map(|p| p.values.iter().map(|&v| c.object_name(v)).collect())
                        .collect();
                    r.detail("presheaves", pc.len())
                        .detail("morphisms", pc.morphisms.len())
                        .detail("values", json!(values))
                }
                Err(e) => core_error(r, e),
            }
        });
    }
}

/// Yoneda lemma, full faithfulness and hom-object records for one enriched category.
fn yoneda_records(a: &MCat, limits: &Limits) -> Result<[Record; 3], enrichkit_core::Error> {
    let pc = enumerate_presheaves(a, limits)?;
    let lemma = check_yoneda_lemma(a, &pc.presheaves, limits)?;
    let ff = check_fully_faithful(a, limits)?;
    let hom = check_hom_objects(a, &pc)?;
    Ok([
        Record::new("yoneda_lemma", "")
            .detail("presheaves", pc.len())
            .detail("cells", lemma.cells)
            .failures(lemma.failures),
        Record::new("fully_faithful", "").detail("cells", ff.cells).failures(ff.failures),
        Record::new("hom_objects", "")
            .detail("pairs", hom.pairs)
            .detail("canonical_universal", hom.canonical_universal)
            .detail("exact", hom.exact)
            .detail("isomorphic", hom.isomorphic)
            .failures(hom.failures),
    ])
}

fn yoneda(run: &mut Runner, spec: &SpecFile) {
    let limits = run.opts.limits;
    for name in spec.enriched.keys() {
        let records = match spec.enriched(name, &limits) {
            Ok(a) => yoneda_records(&a, &limits).map_err(|e| core_error(Record::new("", ""), e)),
            Err(e) => Err(build_error(Record::new("", ""), e)),
        };
        for (i, check) in ["yoneda_lemma", "fully_faithful", "hom_objects"].into_iter().enumerate() {
            let template = match &records {
                Ok(rs) => rs[i].clone(),
                Err(r) => r.clone(),
            };
            run.record(check, name, |r| Record {
                check: r.check,
                instance: r.instance,
                ..template
            });
        }
    }
}

/// The colimit cocone itself, then `g ∘ legs` for every map `g` out of the apex into a set of size ≤ 2.
fn standard_probes(wc: &WCocone<SkSet, SkMap>, cap: usize) -> Vec<(WCocone<SkSet, SkMap>, Option<SkMap>)> {
    let z = wc.apex.0;
    let mut probes = vec![(wc.clone(), Some(SkMap::identity(z)))];
    for t in 0..=2 {
        for g in maps_between(z, t).into_iter().take(cap) {
            probes.push((post_compose(&FinSets, wc, &g), Some(g)));
        }
    }
    probes.truncate(cap);
    probes
}

fn colimit_record(r: Record, a: &SetEnriched, w: &Weight, f: &MFunET<SkSet, SkMap>, probes: Option<Vec<SkMap>>, limits: &Limits) -> Record {
    let wc = match weighted_colimit(a, &FinSets, w, f, limits) {
        Ok(wc) => wc,
        Err(e) => return core_error(r, e.into()),
    };
    let probes = match probes {
        None => standard_probes(&wc.cocone, 64),
        Some(gs) => {
            let mut ps = vec![(wc.cocone.clone(), Some(SkMap::identity(wc.cocone.apex.0)))];
            ps.extend(gs.into_iter().map(|g| (post_compose(&FinSets, &wc.cocone, &g), Some(g))));
            ps
        }
    };
    let u = check_universal(a, &FinSets, w, f, &wc, &probes);
    r.detail("apex", wc.cocone.apex.0)
        .detail("probes", u.probes)
        .detail("jointly_surjective", u.jointly_surjective)
        .failures(u.failures)
}

fn coyoneda_record(r: Record, a: &SetEnriched, f: &MFunET<SkSet, SkMap>, limits: &Limits) -> Record {
    let ext = Ext::new(a, &FinSets, f.clone(), *limits);
    let mut failures = Vec::new();
    for x in 0..a.object_count() {
        match ext.coyoneda(x) {
            Ok((_, Some(_))) => {}
            Ok((_, None)) => failures.push(format!(
                "Ext(F)(Y({})) → F({}) is not invertible",
                a.object_names()[x],
                a.object_names()[x]
            )),
            Err(e) => return core_error(r, e.into()),
        }
    }
    r.detail("objects", a.object_count()).failures(failures)
}

fn canonical_record(r: Record, a: &SetEnriched, w: &Weight, limits: &Limits) -> Record {
    match canonical_presentation(a, w, limits) {
        Ok(cp) if cp.inverse.is_some() => r.detail("iso", true),
        Ok(_) => r.detail("iso", false).failures(["colim_F(Y) → F is not invertible".to_string()]),
        Err(e) => core_error(r, e.into()),
    }
}

fn equivalence_record(r: Record, a: &SetEnriched, f: &MFunET<SkSet, SkMap>, extra: &[Weight], limits: &Limits) -> Record {
    match check_equivalence(a, &FinSets, f, extra, limits) {
        Ok(e) => r
            .detail("unit_components", e.unit_components)
            .detail("weights", e.weights)
            .detail("naturality_squares", e.naturality_squares)
            .detail("coproducts", e.coproducts)
            .detail("coequalizers", e.coequalizers)
            .failures(e.failures),
        Err(e) => core_error(r, e.into()),
    }
}

fn wcolim(run: &mut Runner, spec: &SpecFile) {
    let limits = run.opts.limits;
    for (wname, wdecl) in &spec.weights {
        for (fname, fdecl) in &spec.diagrams {
            if wdecl.category != fdecl.category {
                continue;
            }
            let instance = format!("{wname}*{fname}");
            run.record("weighted_colimit", &instance, |r| {
                match (spec.weight(wname, &limits), spec.diagram(fname, &limits)) {
                    (Ok((a, w)), Ok((_, f))) => colimit_record(r, &a, &w, &f, None, &limits),
                    (Err(e), _) | (_, Err(e)) => build_error(r, e),
                }
            });
        }
    }
    for fname in spec.diagrams.keys() {
        run.record("coyoneda", fname, |r| match spec.diagram(fname, &limits) {
            Ok((a, f)) => coyoneda_record(r, &a, &f, &limits),
            Err(e) => build_error(r, e),
        });
    }
    for wname in spec.weights.keys() {
        run.record("canonical_presentation", wname, |r| match spec.weight(wname, &limits) {
            Ok((a, w)) => canonical_record(r, &a, &w, &limits),
            Err(e) => build_error(r, e),
        });
    }
}

fn universal(run: &mut Runner, spec: &SpecFile) {
    let limits = run.opts.limits;
    for (fname, fdecl) in &spec.diagrams {
        run.record("equivalence", fname, |r| {
            let (a, f) = match spec.diagram(fname, &limits) {
                Ok(x) => x,
                Err(e) => return build_error(r, e),
            };
            let mut extra = Vec::new();
            for (wname, wdecl) in &spec.weights {
                if wdecl.category == fdecl.category {
                    match spec.weight(wname, &limits) {
                        Ok((_, w)) => extra.push(w),
                        Err(e) => return build_error(r, e),
                    }
                }
            }
            equivalence_record(r, &a, &f, &extra, &limits)
        });
    }
}

/// Merges per-instance records of one check into a single record, summing numeric details.
fn merge(check: &str, instance: &str, parts: Vec<(usize, Record)>) -> Record {
    let mut out = Record::new(check, instance).detail("instances", parts.len());
    let mut capped = Vec::new();
    for (i, r) in parts {
        out.millis += r.millis;
        for (k, v) in r.details {
            if let Some(n) = v.as_u64() {
                let total = out.details.get(&k).and_then(|t| t.as_u64()).unwrap_or(0) + n;
                out.details.insert(k, json!(total));
            } else if v.is_string() && !out.details.contains_key(&k) {
                out.details.insert(k, json!(format!("#{i}: {}", v.as_str().unwrap_or_default())));
            }
        }
        match r.verdict {
            crate::report::Verdict::ResourceCap => capped.extend(r.witnesses.into_iter().map(|w| format!("#{i}: {w}"))),
            _ => out = out.failures(r.witnesses.into_iter().map(|w| format!("#{i}: {w}")).collect::<Vec<_>>()),
        }
    }
    if !capped.is_empty() {
        out = out.cap(capped.join("; "));
    }
    out
}

fn timed(f: impl FnOnce() -> Record) -> Record {
    let start = Instant::now();
    let mut r = f();
    r.millis = start.elapsed().as_millis();
    r
}

fn fuzz(run: &mut Runner) {
    let opts = run.opts;
    let limits = opts.limits;
    let label = format!("seed {}", opts.seed);
    let mut rng = corpus::rng(opts.seed);

    let enriched_checks = ["yoneda_lemma", "fully_faithful", "hom_objects", "unit_automatism"];
    if enriched_checks.iter().any(|c| run.wants(c, &label)) {
        let mut parts: [Vec<(usize, Record)>; 4] = Default::default();
        let mut skipped = 0usize;
        let mut drawn = 0usize;
        // instances that hit a resource cap are replaced, up to twice the requested count
        while parts[0].len() < opts.enriched_count && drawn < 3 * opts.enriched_count {
            let i = drawn;
            drawn += 1;
            let a = corpus::random_pair(&mut rng);
            let start = Instant::now();
            let rs = match yoneda_records(&a, &limits) {
                Ok(rs) => rs,
                Err(e) if e.is_size_bound() => {
                    skipped += 1;
                    continue;
                }
                Err(e) => {
                    let r = Record::new("", "").failures([e.to_string()]);
                    [r.clone(), r.clone(), r]
                }
            };
            let millis = start.elapsed().as_millis();
            for (k, mut r) in rs.into_iter().enumerate() {
                r.millis = millis / 3;
                parts[k].push((i, r));
            }
            let unit = timed(|| match unit_automatism(&a, &LTensored::regular(a.base_arc().clone()), &limits) {
                // a measurement: violations are counted, never failed
                Ok(s) => {
                    let mut r = Record::new("", "")
                        .detail("square_only", s.square_only)
                        .detail("unit_violations", s.unit_violations);
                    if s.unit_violations > 0 {
                        r.details.insert(
                            "example".into(),
                            json!(format!(
                                "{} of {} square-satisfying candidates violate the unit law",
                                s.unit_violations, s.square_only
                            )),
                        );
                    }
                    r
                }
                Err(e) => core_error(Record::new("", ""), e.into()),
            });
            parts[3].push((i, unit));
        }
        for (k, check) in enriched_checks.into_iter().enumerate() {
            let merged = merge(check, &label, std::mem::take(&mut parts[k])).detail("skipped", skipped);
            run.push(merged);
        }
    }

    let colimit_checks = ["coyoneda", "universal", "canonical_presentation", "equivalence"];
    if !colimit_checks.iter().any(|c| run.wants(c, &label)) {
        return;
    }
    let mut parts: [Vec<(usize, Record)>; 4] = Default::default();
    for i in 0..opts.colimit_count {
        let cat = corpus::random_set_category(&mut rng);
        let a = SetEnriched::new(cat);
        let f = corpus::random_diagram(&mut rng, &a, 3);
        let w = corpus::random_weight(&mut rng, &a, 3);
        let p = corpus::random_weight(&mut rng, &a, 3);
        let wc = weighted_colimit(&a, &FinSets, &w, &f, &limits);
        let probes = wc.as_ref().ok().map(|wc| {
            let z = wc.cocone.apex.0;
            (0..20)
                .map(|_| {
                    let t = rng.random_range(1..=3);
                    SkMap::new(t, (0..z).map(|_| rng.random_range(0..t)).collect()).expect("in range")
                })
                .collect::<Vec<_>>()
        });
        parts[0].push((i, timed(|| coyoneda_record(Record::new("", ""), &a, &f, &limits))));
        parts[1].push((i, timed(|| colimit_record(Record::new("", ""), &a, &w, &f, probes, &limits))));
        parts[2].push((i, timed(|| canonical_record(Record::new("", ""), &a, &p, &limits))));
        parts[3].push((
            i,
            timed(|| equivalence_record(Record::new("", ""), &a, &f, std::slice::from_ref(&w), &limits)),
        ));
    }
    for (k, check) in colimit_checks.into_iter().enumerate() {
        let mut m = merge(check, &label, std::mem::take(&mut parts[k]));
        m.details.shift_remove("iso");
        run.push(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn small_fuzz_run_passes_and_is_reproducible() {
        let opts = Options {
            seed: 3,
            enriched_count: 5,
            colimit_count: 3,
            ..Options::default()
        };
        let a = run(Command::Fuzz, None, &opts);
        let b = run(Command::Fuzz, None, &opts);
        assert_eq!(a.machine(), b.machine());
        assert!(a.records.iter().all(|r| r.verdict == Verdict::Pass), "{}", a.human());
        assert_eq!(a.records.len(), 8);
    }

    #[test]
    fn check_filter_keeps_matching_records() {
        let opts = Options {
            check: Some("coyoneda".into()),
            enriched_count: 2,
            colimit_count: 2,
            ..Options::default()
        };
        let r = run(Command::Fuzz, None, &opts);
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].check, "coyoneda");
    }
}
