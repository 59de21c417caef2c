//! Executable checks of the structural statements, run per group and
//! aggregated over a corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith;
use crate::classify::{
    all_schmidt_subnormal, is_supersolvable, ved_decomposition, MnnProfile, SupersolvableVerdict,
    VedCertificate,
};
use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup, Subgroup};
use crate::lattice::{self, SubgroupLattice};
use crate::series::{self, SeriesProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckId {
    L1,
    L2,
    R1,
    #[serde(rename = "HALL")]
    Hall,
    R2,
    R3,
    P1,
    L3,
    P2,
    T1,
    C4,
    #[serde(rename = "VED")]
    Ved,
    #[serde(rename = "NW")]
    Nw,
    #[serde(rename = "SCHENK")]
    Schenk,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::L1,
        CheckId::L2,
        CheckId::R1,
        CheckId::Hall,
        CheckId::R2,
        CheckId::R3,
        CheckId::P1,
        CheckId::L3,
        CheckId::P2,
        CheckId::T1,
        CheckId::C4,
        CheckId::Ved,
        CheckId::Nw,
        CheckId::Schenk,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::L1 => "L1",
            CheckId::L2 => "L2",
            CheckId::R1 => "R1",
            CheckId::Hall => "HALL",
            CheckId::R2 => "R2",
            CheckId::R3 => "R3",
            CheckId::P1 => "P1",
            CheckId::L3 => "L3",
            CheckId::P2 => "P2",
            CheckId::T1 => "T1",
            CheckId::C4 => "C4",
            CheckId::Ved => "VED",
            CheckId::Nw => "NW",
            CheckId::Schenk => "SCHENK",
        }
    }

    /// Comma-separated ids, case-insensitive; empty input gives no checks.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        let mut out: Vec<CheckId> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The hypothesis of the statement does not hold for this group.
    Vacuous,
    /// A cap prevented the computation.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub group_label: String,
    pub status: Status,
    pub witness: Value,
}

/// Lazily computed data shared by all checks on one group.
pub struct Analysis<'a> {
    pub group: &'a FiniteGroup,
    caps: Caps,
    series: OnceLock<std::result::Result<SeriesProfile, String>>,
    lattice: OnceLock<std::result::Result<SubgroupLattice, String>>,
    mnn: OnceLock<MnnProfile>,
    supersolvable: OnceLock<std::result::Result<SupersolvableVerdict, String>>,
    ved: OnceLock<std::result::Result<VedCertificate, String>>,
}

/// Why a check could not produce a verdict.
enum Stop {
    Skipped(String),
    Internal(String),
}

impl From<&String> for Stop {
    fn from(s: &String) -> Self {
        Stop::Skipped(s.clone())
    }
}

type Verdict = std::result::Result<(Status, Value), Stop>;

fn stringify<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn orders(subgroups: &[Subgroup]) -> Vec<usize> {
    subgroups.iter().map(Subgroup::order).collect()
}

fn vacuous(reason: &str) -> Verdict {
    Ok((Status::Vacuous, json!({ "reason": reason })))
}

fn verdict(ok: bool, witness: Value) -> Verdict {
    Ok((if ok { Status::Pass } else { Status::Fail }, witness))
}

impl<'a> Analysis<'a> {
    pub fn new(group: &'a FiniteGroup, caps: Caps) -> Self {
        Analysis {
            group,
            caps,
            series: OnceLock::new(),
            lattice: OnceLock::new(),
            mnn: OnceLock::new(),
            supersolvable: OnceLock::new(),
            ved: OnceLock::new(),
        }
    }

    fn series(&self) -> std::result::Result<&SeriesProfile, Stop> {
        self.series
            .get_or_init(|| stringify(SeriesProfile::compute(self.group)))
            .as_ref()
            .map_err(Stop::from)
    }

    fn lattice(&self) -> std::result::Result<&SubgroupLattice, Stop> {
        self.lattice
            .get_or_init(|| stringify(SubgroupLattice::build_with_caps(self.group, &self.caps)))
            .as_ref()
            .map_err(Stop::from)
    }

    fn mnn(&self) -> std::result::Result<&MnnProfile, Stop> {
        let lattice = self.lattice()?;
        Ok(self
            .mnn
            .get_or_init(|| MnnProfile::compute(self.group, lattice)))
    }

    fn supersolvable(&self) -> std::result::Result<&SupersolvableVerdict, Stop> {
        let lattice = self.lattice()?;
        self.supersolvable
            .get_or_init(|| stringify(is_supersolvable(self.group, lattice)))
            .as_ref()
            .map_err(|e| Stop::Internal(e.clone()))
    }

    fn ved(&self) -> std::result::Result<&VedCertificate, Stop> {
        self.ved
            .get_or_init(|| stringify(ved_decomposition(self.group)))
            .as_ref()
            .map_err(Stop::from)
    }

    /// The unique proper member of M(G) when m = 2.
    fn k(&self) -> std::result::Result<Option<&Subgroup>, Stop> {
        Ok(self.mnn()?.k_subgroup.as_ref())
    }

    fn is_schmidt_subgroup(&self, s: &Subgroup) -> std::result::Result<bool, Stop> {
        Ok(self.mnn()?.schmidt_subgroups.contains(s))
    }

    pub fn run(&self, check: CheckId, label: &str) -> CheckReport {
        let (status, witness) = match self.evaluate(check) {
            Ok(v) => v,
            Err(Stop::Skipped(reason)) => (Status::Skipped, json!({ "reason": reason })),
            Err(Stop::Internal(reason)) => (Status::Fail, json!({ "internal_error": reason })),
        };
        CheckReport {
            check_id: check,
            group_label: label.to_string(),
            status,
            witness,
        }
    }

    fn evaluate(&self, check: CheckId) -> Verdict {
        match check {
            CheckId::L1 => self.m2_iff_schmidt_maximal_normal(),
            CheckId::L2 => self.prime_index_over_k(),
            CheckId::R1 => self.k_unique(),
            CheckId::Hall => self.hall(),
            CheckId::R2 => self.second_derived_quotient(),
            CheckId::R3 => self.second_derived_members(),
            CheckId::P1 => self.m2_solvable(),
            CheckId::L3 => self.k_meets_maximal_normals(),
            CheckId::P2 => self.k_only_maximal(),
            CheckId::T1 => self.m2_supersolvable_ved(),
            CheckId::C4 => self.solvable_m2_supersolvable(),
            CheckId::Ved => self.ved_equivalence(),
            CheckId::Nw => self.newman_wiegold(),
            CheckId::Schenk => self.schenkman(),
        }
    }

    /// m = 2 ⇔ (G non-nilpotent and some maximal normal subgroup is Schmidt).
    fn m2_iff_schmidt_maximal_normal(&self) -> Verdict {
        let g = self.group;
        let m = self.mnn()?.m;
        let lattice = self.lattice()?;
        let mut schmidt_maximal_normal = Vec::new();
        for n in lattice.maximal_normal_subgroups() {
            if self.is_schmidt_subgroup(n)? {
                schmidt_maximal_normal.push(n.order());
            }
        }
        let nilpotent = series::subgroup_is_nilpotent(g, &g.whole());
        let lhs = m == 2;
        let rhs = !nilpotent && !schmidt_maximal_normal.is_empty();
        verdict(
            lhs == rhs,
            json!({
                "m": m,
                "nilpotent": nilpotent,
                "schmidt_maximal_normal_orders": schmidt_maximal_normal,
                "forward": !lhs || rhs,
                "backward": !rhs || lhs,
            }),
        )
    }

    fn prime_index_over_k(&self) -> Verdict {
        let Some(k) = self.k()? else {
            return vacuous("m != 2");
        };
        let index = self.group.order() / k.order();
        let derived = self.series()?.derived_subgroup();
        let prime = arith::is_prime(index as u64);
        let contained = derived.is_subgroup_of(k);
        verdict(
            prime && contained,
            json!({
                "k_order": k.order(),
                "index": index,
                "index_prime": prime,
                "derived_order": derived.order(),
                "derived_in_k": contained,
            }),
        )
    }

    /// K is the only proper member of M(G), and is normal.
    fn k_unique(&self) -> Verdict {
        let Some(k) = self.k()? else {
            return vacuous("m != 2");
        };
        let g = self.group;
        let proper: Vec<&Subgroup> = self
            .mnn()?
            .members
            .iter()
            .filter(|s| s.order() < g.order())
            .collect();
        let unique = proper.len() == 1 && proper[0] == k;
        let normal = g.is_normal(k);
        verdict(
            unique && normal,
            json!({ "k_order": k.order(), "proper_members": proper.len(), "normal": normal }),
        )
    }

    /// For every normal N: N nilpotent and G/N' nilpotent imply G nilpotent.
    fn hall(&self) -> Verdict {
        let g = self.group;
        let nilpotent = self.series()?.is_nilpotent();
        let lattice = self.lattice()?;
        let mut premises = 0;
        for n in lattice.normal_subgroups() {
            if !series::subgroup_is_nilpotent(g, n) {
                continue;
            }
            let n_prime = g.derived_subgroup(n);
            let q = g
                .quotient(&n_prime)
                .map_err(|e| Stop::Skipped(e.to_string()))?;
            if !series::subgroup_is_nilpotent(&q.group, &q.group.whole()) {
                continue;
            }
            premises += 1;
            if !nilpotent {
                return verdict(
                    false,
                    json!({ "n_order": n.order(), "n_derived_order": n_prime.order() }),
                );
            }
        }
        if premises == 0 {
            return vacuous("no nilpotent normal N with G/N' nilpotent");
        }
        verdict(
            true,
            json!({ "premises_met": premises, "nilpotent": nilpotent }),
        )
    }

    /// Hypothesis shared by R2 and R3: m = 2 and G' < K.
    fn strict_k(&self) -> std::result::Result<Option<&Subgroup>, Stop> {
        let Some(k) = self.k()? else {
            return Ok(None);
        };
        let derived = self.series()?.derived_subgroup();
        Ok((derived.is_proper_subgroup_of(k)).then_some(k))
    }

    fn second_derived_quotient(&self) -> Verdict {
        let Some(k) = self.strict_k()? else {
            return vacuous("m != 2 or G' = K");
        };
        let g = self.group;
        let s = self.series()?;
        let solvable = s.is_solvable();
        let g2 = s.derived_series.get(2).unwrap_or(s.derived_subgroup());
        let q = g.quotient(g2).map_err(|e| Stop::Skipped(e.to_string()))?;
        let image_nilpotent = series::subgroup_is_nilpotent(&q.group, &q.group.whole());
        verdict(
            solvable && !image_nilpotent,
            json!({
                "k_order": k.order(),
                "solvable": solvable,
                "second_derived_order": g2.order(),
                "quotient_order": q.group.order(),
                "quotient_nilpotent": image_nilpotent,
            }),
        )
    }

    fn second_derived_members(&self) -> Verdict {
        let Some(k) = self.strict_k()? else {
            return vacuous("m != 2 or G' = K");
        };
        let g = self.group;
        let s = self.series()?;
        let g2 = s.derived_series.get(2).unwrap_or(s.derived_subgroup());
        let q = g.quotient(g2).map_err(|e| Stop::Skipped(e.to_string()))?;
        let ql = SubgroupLattice::build_with_caps(&q.group, &self.caps)
            .map_err(|e| Stop::Skipped(e.to_string()))?;
        let profile = MnnProfile::compute(&q.group, &ql);
        let mut expected = vec![q.image(k), q.group.whole()];
        expected.sort();
        let mut got = profile.members.clone();
        got.sort();
        verdict(
            got == expected,
            json!({
                "quotient_order": q.group.order(),
                "member_orders": orders(&got),
                "k_image_order": expected[0].order(),
            }),
        )
    }

    fn m2_solvable(&self) -> Verdict {
        if self.k()?.is_none() {
            return vacuous("m != 2");
        }
        let s = self.series()?;
        verdict(
            s.is_solvable(),
            json!({ "derived_length": s.derived_length }),
        )
    }

    /// [K, M] ≠ 1 for every maximal normal M ≠ K.
    fn k_meets_maximal_normals(&self) -> Verdict {
        let Some(k) = self.k()? else {
            return vacuous("m != 2");
        };
        let g = self.group;
        let others: Vec<&Subgroup> = self
            .lattice()?
            .maximal_normal_subgroups()
            .into_iter()
            .filter(|m| *m != k)
            .collect();
        if others.is_empty() {
            return vacuous("K is the only maximal normal subgroup");
        }
        let bad: Vec<usize> = others
            .iter()
            .filter(|m| g.commutator(k, m).is_trivial())
            .map(|m| m.order())
            .collect();
        verdict(
            bad.is_empty(),
            json!({ "k_order": k.order(), "others": others.len(), "commuting_orders": bad }),
        )
    }

    fn k_only_maximal(&self) -> Verdict {
        let Some(k) = self.k()? else {
            return vacuous("m != 2");
        };
        let g = self.group;
        let lattice = self.lattice()?;
        let primes = |s: &Subgroup| arith::prime_divisors(s.order() as u64);
        let pk = primes(k);
        let maximal: Vec<&Subgroup> = lattice.maximal_subgroups().collect();
        let Some(m) = maximal
            .iter()
            .find(|m| primes(m).iter().all(|p| !pk.contains(p)))
        else {
            return vacuous("no maximal subgroup with prime set disjoint from K");
        };
        verdict(
            maximal.len() == 1 && maximal[0] == k,
            json!({
                "k_order": k.order(),
                "disjoint_maximal_order": m.order(),
                "maximal_count": maximal.len(),
                "group_order": g.order(),
            }),
        )
    }

    fn m2_supersolvable_ved(&self) -> Verdict {
        let Some(k) = self.k()? else {
            return vacuous("m != 2");
        };
        let ss = self.supersolvable()?;
        let ved = self.ved()?;
        let derived = self.series()?.derived_subgroup();
        let factors: Vec<Value> = ved
            .factors
            .iter()
            .map(|f| match f.fpd() {
                Some((p, m, d)) => json!({ "p": p, "m": m, "d": d }),
                None => json!({ "order": f.subgroup.order() }),
            })
            .collect();
        verdict(
            ss.supersolvable && ved.status.is_success() && ved.coprime,
            json!({
                "k_order": k.order(),
                "derived_equals_k": derived == k,
                "supersolvable": ss.supersolvable,
                "chain": orders(&ss.chain),
                "ved_status": status_text(ved),
                "ved_factors": factors,
                "coprime": ved.coprime,
            }),
        )
    }

    fn solvable_m2_supersolvable(&self) -> Verdict {
        if self.k()?.is_none() {
            return vacuous("m != 2");
        }
        if !self.series()?.is_solvable() {
            return vacuous("G is not solvable");
        }
        let ss = self.supersolvable()?;
        verdict(
            ss.supersolvable,
            json!({ "supersolvable": ss.supersolvable, "chain": orders(&ss.chain) }),
        )
    }

    fn ved_equivalence(&self) -> Verdict {
        if self.series()?.is_nilpotent() {
            return vacuous("G is nilpotent");
        }
        let profile = self.mnn()?;
        let subnormal = all_schmidt_subnormal(self.group, profile);
        let ved = self.ved()?;
        let certified = ved.status.is_success() && ved.coprime;
        if certified && !ved.verify() {
            return Err(Stop::Internal(
                "Ved certificate failed re-verification".into(),
            ));
        }
        verdict(
            subnormal == certified,
            json!({
                "all_schmidt_subnormal": subnormal,
                "schmidt_orders": orders(&profile.schmidt_subgroups),
                "ved_status": status_text(ved),
                "coprime": ved.coprime,
                "quotient_order": ved.quotient_order,
            }),
        )
    }

    /// Non-nilpotent G in which any two proper normal subgroups generate a
    /// proper subgroup has G/G' a cyclic p-group and G' = γ_∞(G).
    fn newman_wiegold(&self) -> Verdict {
        let g = self.group;
        let s = self.series()?;
        if s.is_nilpotent() {
            return vacuous("G is nilpotent");
        }
        let proper: Vec<Subgroup> = lattice::normal_subgroups(g)
            .into_iter()
            .filter(|n| n.order() < g.order())
            .collect();
        let premise = proper
            .iter()
            .enumerate()
            .all(|(i, a)| proper[i..].iter().all(|b| g.join(a, b).order() < g.order()));
        if !premise {
            return vacuous("two proper normal subgroups generate G");
        }
        let derived = s.derived_subgroup();
        let q = g
            .quotient(derived)
            .map_err(|e| Stop::Skipped(e.to_string()))?;
        let index = q.group.order();
        let p_power = index == 1 || arith::prime_power_base(index as u64).is_some();
        let cyclic = q.group.is_cyclic(&q.group.whole());
        let lcs_stable = derived == s.gamma_infinity();
        verdict(
            p_power && cyclic && lcs_stable,
            json!({
                "abelianization_order": index,
                "cyclic": cyclic,
                "prime_power": p_power,
                "derived_equals_gamma_infinity": lcs_stable,
            }),
        )
    }

    fn schenkman(&self) -> Verdict {
        let lattice = self.lattice()?;
        let (omega, norm) = lattice::wielandt_and_norm(self.group, lattice);
        let z2 = self.series()?.center_term(2);
        verdict(
            norm.is_subgroup_of(z2),
            json!({ "norm_order": norm.order(), "wielandt_order": omega.order(), "z2_order": z2.order() }),
        )
    }
}

fn status_text(ved: &VedCertificate) -> String {
    match &ved.status {
        crate::classify::VedStatus::Success => "success".into(),
        crate::classify::VedStatus::Fail(r) => format!("fail: {r}"),
    }
}

pub fn run_check(check: CheckId, label: &str, g: &FiniteGroup, caps: Caps) -> CheckReport {
    Analysis::new(g, caps).run(check, label)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.skipped
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check_id: CheckId,
    pub group_label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub groups: usize,
    pub tallies: BTreeMap<CheckId, Tally>,
    pub failures: Vec<Failure>,
    pub reports: Vec<CheckReport>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn for_check(&self, check: CheckId) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(move |r| r.check_id == check)
    }

    /// Plain-text tally table.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{:<8} {:>6} {:>6} {:>8} {:>8}\n",
            "check", "pass", "fail", "vacuous", "skipped"
        );
        for (id, t) in &self.tallies {
            out.push_str(&format!(
                "{:<8} {:>6} {:>6} {:>8} {:>8}\n",
                id.as_str(),
                t.pass,
                t.fail,
                t.vacuous,
                t.skipped
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("FAIL {} {}\n", f.check_id, f.group_label));
        }
        out
    }
}

/// Runs every check on every entry with `jobs` worker threads (0 means the
/// rayon default). Report content does not depend on `jobs`.
pub fn run_suite(
    entries: &[CorpusEntry],
    checks: &[CheckId],
    jobs: usize,
    caps: Caps,
) -> SuiteReport {
    let start = Instant::now();
    let work = || -> Vec<CheckReport> {
        entries
            .par_iter()
            .flat_map_iter(|e| {
                let analysis = Analysis::new(&e.group, caps);
                checks
                    .iter()
                    .map(|&c| analysis.run(c, &e.label))
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let mut reports = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };
    reports.sort_by(|a, b| {
        a.group_label
            .cmp(&b.group_label)
            .then(a.check_id.cmp(&b.check_id))
    });

    let mut tallies: BTreeMap<CheckId, Tally> =
        checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut failures = Vec::new();
    for r in &reports {
        tallies.get_mut(&r.check_id).unwrap().add(r.status);
        if r.status == Status::Fail {
            failures.push(Failure {
                check_id: r.check_id,
                group_label: r.group_label.clone(),
            });
        }
    }
    SuiteReport {
        groups: entries.len(),
        tallies,
        failures,
        reports,
        wall_time: start.elapsed(),
    }
}
