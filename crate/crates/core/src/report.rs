//! Serializable summaries of a group's structure.

use serde::Serialize;

use crate::classify::{
    dedekind_tgroup, is_schmidt, is_supersolvable, ved_decomposition, MnnProfile, VedCertificate,
    VedStatus,
};
use crate::error::Result;
use crate::group::{Caps, FiniteGroup, Subgroup};
use crate::lattice::{self, SubgroupLattice};
use crate::series::SeriesProfile;

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
    pub primes: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Flags {
    pub nilpotent: bool,
    pub solvable: bool,
    pub supersolvable: bool,
    pub schmidt: bool,
    pub dedekind: bool,
    pub t_group: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesInfo {
    pub derived_length: Option<usize>,
    pub nilpotency_class: Option<usize>,
    pub hypercenter_order: usize,
    pub gamma_inf_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MnnInfo {
    pub m: usize,
    pub member_orders: Vec<usize>,
    pub k_order: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fpd {
    pub p: Option<usize>,
    pub m: Option<usize>,
    pub d: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VedInfo {
    pub status: &'static str,
    pub reason: Option<String>,
    pub factors: Vec<Fpd>,
    pub coprime: bool,
}

impl VedInfo {
    pub fn from_certificate(c: &VedCertificate) -> Self {
        let (status, reason) = match &c.status {
            VedStatus::Success => ("success", None),
            VedStatus::Fail(r) => ("fail", Some(r.clone())),
        };
        VedInfo {
            status,
            reason,
            factors: c
                .factors
                .iter()
                .map(|f| {
                    let t = f.fpd();
                    Fpd {
                        p: t.map(|t| t.0),
                        m: t.map(|t| t.1),
                        d: t.map(|t| t.2),
                    }
                })
                .collect(),
            coprime: c.coprime,
        }
    }
}

/// Output of `analyze`.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub group: GroupInfo,
    pub flags: Flags,
    pub series: SeriesInfo,
    pub mnn: MnnInfo,
    pub ved: VedInfo,
}

pub fn analyze(spec: &str, g: &FiniteGroup, caps: &Caps) -> Result<AnalyzeReport> {
    let series = SeriesProfile::compute(g)?;
    let lattice = SubgroupLattice::build_with_caps(g, caps)?;
    let profile = MnnProfile::compute(g, &lattice);
    let (dedekind, t_group) = dedekind_tgroup(g, &lattice);
    let ved = ved_decomposition(g)?;
    Ok(AnalyzeReport {
        group: GroupInfo {
            spec: spec.to_string(),
            order: g.order(),
            degree: g.degree(),
            primes: g.prime_spectrum(),
        },
        flags: Flags {
            nilpotent: series.is_nilpotent(),
            solvable: series.is_solvable(),
            supersolvable: is_supersolvable(g, &lattice)?.supersolvable,
            schmidt: is_schmidt(g, &lattice)?,
            dedekind,
            t_group,
        },
        series: SeriesInfo {
            derived_length: series.derived_length,
            nilpotency_class: series.nilpotency_class,
            hypercenter_order: series.hypercenter().order(),
            gamma_inf_order: series.gamma_infinity().order(),
        },
        mnn: MnnInfo {
            m: profile.m,
            member_orders: profile.member_orders(),
            k_order: profile.k_subgroup.as_ref().map(Subgroup::order),
        },
        ved: VedInfo::from_certificate(&ved),
    })
}

impl AnalyzeReport {
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let opt = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
        let f = &self.flags;
        let mut out = format!(
            "group          {}\norder          {}\ndegree         {}\nprimes         {:?}\n",
            self.group.spec, self.group.order, self.group.degree, self.group.primes
        );
        out.push_str(&format!(
            "nilpotent      {}\nsolvable       {}\nsupersolvable  {}\nschmidt        {}\ndedekind       {}\nt-group        {}\n",
            yn(f.nilpotent), yn(f.solvable), yn(f.supersolvable), yn(f.schmidt), yn(f.dedekind), yn(f.t_group)
        ));
        out.push_str(&format!(
            "derived length {}\nclass          {}\n|Z_inf|        {}\n|gamma_inf|    {}\n",
            opt(self.series.derived_length),
            opt(self.series.nilpotency_class),
            self.series.hypercenter_order,
            self.series.gamma_inf_order
        ));
        out.push_str(&format!(
            "m              {}\nM(G) orders    {:?}\n|K|            {}\n",
            self.mnn.m,
            self.mnn.member_orders,
            opt(self.mnn.k_order)
        ));
        out.push_str(&format!("ved            {}", self.ved.status));
        if let Some(r) = &self.ved.reason {
            out.push_str(&format!(" ({r})"));
        }
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupInfo {
    pub fn new(g: &FiniteGroup, s: &Subgroup) -> Self {
        SubgroupInfo {
            order: s.order(),
            generators: s
                .generators()
                .iter()
                .map(|&e| g.element(e).to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SchmidtInfo {
    #[serde(flatten)]
    pub subgroup: SubgroupInfo,
    pub subnormal: bool,
    pub defect: Option<usize>,
}

/// Output of `mnn`.
#[derive(Debug, Clone, Serialize)]
pub struct MnnReport {
    pub m: usize,
    pub members: Vec<SubgroupInfo>,
    pub schmidt: Vec<SchmidtInfo>,
    pub k: Option<SubgroupInfo>,
}

impl MnnReport {
    pub fn new(g: &FiniteGroup, profile: &MnnProfile) -> Self {
        MnnReport {
            m: profile.m,
            members: profile
                .members
                .iter()
                .map(|s| SubgroupInfo::new(g, s))
                .collect(),
            schmidt: profile
                .schmidt_subgroups
                .iter()
                .map(|s| {
                    let r = lattice::subnormal_defect(g, s);
                    SchmidtInfo {
                        subgroup: SubgroupInfo::new(g, s),
                        subnormal: r.subnormal,
                        defect: r.defect,
                    }
                })
                .collect(),
            k: profile.k_subgroup.as_ref().map(|s| SubgroupInfo::new(g, s)),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("m = {}\n", self.m);
        for s in &self.members {
            out.push_str(&format!(
                "member   order {:>4}  <{}>\n",
                s.order,
                s.generators.join(", ")
            ));
        }
        for s in &self.schmidt {
            let defect = s
                .defect
                .map_or("not subnormal".to_string(), |d| format!("defect {d}"));
            out.push_str(&format!(
                "schmidt  order {:>4}  <{}>  {defect}\n",
                s.subgroup.order,
                s.subgroup.generators.join(", ")
            ));
        }
        if let Some(k) = &self.k {
            out.push_str(&format!(
                "K        order {:>4}  <{}>\n",
                k.order,
                k.generators.join(", ")
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentInfo {
    pub q: usize,
    pub exponent: usize,
    pub matches_m: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VedFactorInfo {
    pub order: usize,
    pub frobenius: bool,
    pub kernel_order: Option<usize>,
    pub complement_order: Option<usize>,
    pub p: Option<usize>,
    pub m: Option<usize>,
    pub d: Option<usize>,
    pub exponent_checks: Vec<ExponentInfo>,
}

/// Output of `ved`.
#[derive(Debug, Clone, Serialize)]
pub struct VedReport {
    pub quotient_order: usize,
    pub status: &'static str,
    pub reason: Option<String>,
    pub coprime: bool,
    pub verified: bool,
    pub factors: Vec<VedFactorInfo>,
}

impl VedReport {
    pub fn new(c: &VedCertificate) -> Self {
        let info = VedInfo::from_certificate(c);
        VedReport {
            quotient_order: c.quotient_order,
            status: info.status,
            reason: info.reason,
            coprime: c.coprime,
            verified: c.verify(),
            factors: c
                .factors
                .iter()
                .map(|f| {
                    let cert = f.certificate.as_ref();
                    VedFactorInfo {
                        order: f.subgroup.order(),
                        frobenius: cert.is_some(),
                        kernel_order: cert.map(|c| c.kernel.order()),
                        complement_order: cert.map(|c| c.complement.order()),
                        p: cert.and_then(|c| c.p),
                        m: cert.and_then(|c| c.m),
                        d: cert.and_then(|c| c.d),
                        exponent_checks: cert
                            .map(|c| {
                                c.exponent_checks
                                    .iter()
                                    .map(|e| ExponentInfo {
                                        q: e.q,
                                        exponent: e.exponent,
                                        matches_m: e.matches_m,
                                    })
                                    .collect()
                            })
                            .unwrap_or_default(),
                    }
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "|G/Z_inf| = {}\nstatus    = {}",
            self.quotient_order, self.status
        );
        if let Some(r) = &self.reason {
            out.push_str(&format!(" ({r})"));
        }
        out.push_str(&format!("\ncoprime   = {}\n", self.coprime));
        for (i, f) in self.factors.iter().enumerate() {
            match (f.p, f.m, f.d) {
                (Some(p), Some(m), Some(d)) => {
                    let checks: Vec<String> = f
                        .exponent_checks
                        .iter()
                        .map(|e| format!("ord({p} mod {}) = {}", e.q, e.exponent))
                        .collect();
                    out.push_str(&format!(
                        "factor {i}: order {} F({p},{d}) kernel {p}^{m}  [{}]\n",
                        f.order,
                        checks.join(", ")
                    ));
                }
                _ if f.frobenius => out.push_str(&format!(
                    "factor {i}: order {} Frobenius, kernel {} complement {} (not F(p,d))\n",
                    f.order,
                    f.kernel_order.unwrap(),
                    f.complement_order.unwrap()
                )),
                _ => out.push_str(&format!("factor {i}: order {} not Frobenius\n", f.order)),
            }
        }
        out
    }
}
