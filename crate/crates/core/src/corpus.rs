//! Named collections of small groups for the verification harness.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith;
use crate::constructors::GroupSpec;
use crate::dsl;
use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup};
use crate::lattice::SubgroupLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusId {
    S4Subgroups,
    S5Subgroups,
    Families,
    All,
}

impl CorpusId {
    pub const ALL: [CorpusId; 4] = [
        CorpusId::S4Subgroups,
        CorpusId::S5Subgroups,
        CorpusId::Families,
        CorpusId::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CorpusId::S4Subgroups => "s4-subgroups",
            CorpusId::S5Subgroups => "s5-subgroups",
            CorpusId::Families => "families",
            CorpusId::All => "all",
        }
    }
}

impl fmt::Display for CorpusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CorpusId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CorpusId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCorpus(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    /// An expression that rebuilds the group (`Perm[...]` for lattice
    /// representatives).
    pub expr: String,
    pub group: FiniteGroup,
}

/// One representative per conjugacy class of subgroups of S_n, in lattice
/// order, labelled `s{n}/cls-NNN`.
pub fn symmetric_subgroup_classes(n: usize, caps: &Caps) -> Result<Vec<CorpusEntry>> {
    let sn = GroupSpec::Symmetric(n).build_with_cap(caps.elements)?;
    let lattice = SubgroupLattice::build_with_caps(&sn, caps)?;
    Ok(lattice
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let rep = &lattice.subgroups()[class[0]];
            let group = sn.subgroup_as_group(rep);
            let gens: Vec<String> = if group.generators().is_empty() {
                vec!["()".into()]
            } else {
                group.generators().iter().map(ToString::to_string).collect()
            };
            CorpusEntry {
                label: format!("s{n}/cls-{i:03}"),
                expr: format!("Perm[{}]", gens.join(";")),
                group,
            }
        })
        .collect())
}

pub const SL23: &str = "Perm[(0 3 6)(1 7 4);(0 5 1 2)(3 6 7 4)]";

/// (label, expression) for the curated families, before any cap filtering.
pub fn family_exprs() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut push = |label: &str, expr: &str| out.push((format!("fam/{label}"), expr.to_string()));
    for e in ["S(3)", "A(4)", "S(4)", "D(8)", "Q(8)", "D(12)"] {
        push(e, e);
    }
    push("SL(2,3)", SL23);
    for n in 1..=24 {
        let e = format!("C({n})");
        push(&e, &e);
    }
    for p in [2, 3, 5, 7] {
        for d in 2..=6usize {
            if d.gcd(&p) == 1 {
                let e = format!("F({p},{d})");
                push(&e, &e);
            }
        }
    }
    for e in [
        "S(3) x C(3)",
        "S(3) x C(5)",
        "S(3) x C(2)",
        "S(3) x A(4)",
        "A(4) x C(2)",
        "A(4) x C(5)",
        "C(3):C(2)@2",
        "C(7):C(3)@2",
    ] {
        push(e, e);
    }
    out
}

/// The families whose order fits under the element cap, built in order.
pub fn families(caps: &Caps) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (label, expr) in family_exprs() {
        let spec = dsl::parse_expr(&expr)
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .to_spec();
        if spec.expected_order().is_some_and(|o| o > caps.elements) {
            continue;
        }
        let group = spec.build_with_cap(caps.elements)?;
        out.push(CorpusEntry { label, expr, group });
    }
    Ok(out)
}

pub fn corpus_generate(id: CorpusId, caps: &Caps) -> Result<Vec<CorpusEntry>> {
    match id {
        CorpusId::S4Subgroups => symmetric_subgroup_classes(4, caps),
        CorpusId::S5Subgroups => symmetric_subgroup_classes(5, caps),
        CorpusId::Families => families(caps),
        CorpusId::All => {
            let mut out = symmetric_subgroup_classes(4, caps)?;
            out.extend(symmetric_subgroup_classes(5, caps)?);
            out.extend(families(caps)?);
            Ok(out)
        }
    }
}

/// Orders of the listed families, for reporting which were left out.
pub fn excluded_families(caps: &Caps) -> Vec<(String, usize)> {
    family_exprs()
        .into_iter()
        .filter_map(|(label, expr)| {
            let order = dsl::parse_expr(&expr).ok()?.to_spec().expected_order()?;
            (order > caps.elements).then_some((label, order))
        })
        .collect()
}

/// Whether the prime divisors of |G| agree with the element orders.
pub fn spectrum_consistent(g: &FiniteGroup) -> bool {
    let from_order: Vec<u64> = arith::prime_divisors(g.order() as u64);
    g.prime_spectrum() == from_order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_has_eleven_classes() {
        let c = corpus_generate(CorpusId::S4Subgroups, &Caps::default()).unwrap();
        assert_eq!(c.len(), 11);
        assert_eq!(c[0].label, "s4/cls-000");
        assert_eq!(c[0].group.order(), 1);
        assert_eq!(c.last().unwrap().group.order(), 24);
    }

    #[test]
    fn entries_rebuild_from_their_expressions() {
        for e in corpus_generate(CorpusId::S4Subgroups, &Caps::default()).unwrap() {
            let g = dsl::parse_expr(&e.expr).unwrap().to_spec().build().unwrap();
            assert_eq!(g.order(), e.group.order(), "{}", e.label);
        }
    }

    #[test]
    fn families_respect_the_element_cap() {
        let caps = Caps::default();
        let fam = families(&caps).unwrap();
        let s3c3 = fam.iter().find(|e| e.label == "fam/S(3) x C(3)").unwrap();
        assert_eq!(s3c3.group.order(), 18);
        assert!(fam.iter().all(|e| e.group.order() <= caps.elements));
        assert_eq!(
            excluded_families(&caps),
            vec![("fam/F(7,5)".to_string(), 12005)]
        );
        let sl = fam.iter().find(|e| e.label == "fam/SL(2,3)").unwrap();
        assert_eq!(sl.group.order(), 24);
    }

    #[test]
    fn unknown_corpus() {
        assert!(matches!(
            "s6".parse::<CorpusId>(),
            Err(Error::UnknownCorpus(_))
        ));
        assert_eq!("all".parse::<CorpusId>().unwrap(), CorpusId::All);
    }
}
