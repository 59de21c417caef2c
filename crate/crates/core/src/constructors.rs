//! Named groups and products: cyclic, symmetric, dihedral, quaternion,
//! cyclic-by-cyclic semidirect products and the Frobenius groups F(p, d).

use std::fmt;

use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;

/// Description of a group to construct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of order `n` (not on `n` points).
    Dihedral(usize),
    /// Generalized quaternion group of order `n = 2^k >= 8`.
    Quaternion(usize),
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
    Frobenius {
        p: usize,
        d: usize,
        m: Option<usize>,
    },
    Raw {
        degree: usize,
        generators: Vec<Permutation>,
    },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// C_n ⋊ C_d with the generator of C_d acting as x ↦ x^k.
    CyclicSemidirect {
        n: usize,
        d: usize,
        k: usize,
    },
}

impl GroupSpec {
    /// Checks the parameter ranges without building anything.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            GroupSpec::Cyclic(0) => bad("cyclic order must be at least 1".into()),
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if !(1..=7).contains(&n) => bad(
                format!("symmetric/alternating degree must be in 1..=7, got {n}"),
            ),
            GroupSpec::Dihedral(n) if n % 2 == 1 => bad("dihedral order must be even".into()),
            GroupSpec::Dihedral(n) if n < 4 => bad("dihedral order must be at least 4".into()),
            GroupSpec::Quaternion(n) if n < 8 || !n.is_power_of_two() => bad(format!(
                "quaternion order must be a power of two >= 8, got {n}"
            )),
            GroupSpec::ElementaryAbelian { p, k } => {
                if !arith::is_prime(p as u64) {
                    bad(format!("{p} is not prime"))
                } else if k == 0 {
                    bad("elementary abelian rank must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            GroupSpec::Frobenius { p, d, m } => frobenius_parameters(p, d, m).map(|_| ()),
            GroupSpec::CyclicSemidirect { n, d, k } => check_semidirect(n, d, k),
            GroupSpec::DirectProduct(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Order predicted from the parameters alone, when it is known.
    pub fn expected_order(&self) -> Option<usize> {
        Some(match *self {
            GroupSpec::Cyclic(n) => n,
            GroupSpec::Symmetric(n) => (1..=n).product(),
            GroupSpec::Alternating(n) => ((1..=n).product::<usize>() / 2).max(1),
            GroupSpec::Dihedral(n) | GroupSpec::Quaternion(n) => n,
            GroupSpec::ElementaryAbelian { p, k } => p.pow(k as u32),
            GroupSpec::Frobenius { p, d, m } => {
                let m = frobenius_parameters(p, d, m).ok()?;
                p.pow(m as u32) * d
            }
            GroupSpec::CyclicSemidirect { n, d, .. } => n * d,
            GroupSpec::DirectProduct(ref a, ref b) => a.expected_order()? * b.expected_order()?,
            GroupSpec::Raw { .. } => return None,
        })
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_ELEMENT_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        if let Some(order) = self.expected_order() {
            if order > cap {
                return Err(Error::ElementCapExceeded { cap });
            }
        }
        match *self {
            GroupSpec::Cyclic(n) => cyclic(n),
            GroupSpec::Symmetric(n) => symmetric(n),
            GroupSpec::Alternating(n) => alternating(n),
            GroupSpec::Dihedral(n) => dihedral(n),
            GroupSpec::Quaternion(n) => quaternion(n),
            GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(p, k, cap),
            GroupSpec::Frobenius { p, d, m } => frobenius_fpd_with_cap(p, d, m, cap),
            GroupSpec::CyclicSemidirect { n, d, k } => cyclic_semidirect(n, d, k),
            GroupSpec::Raw {
                degree,
                ref generators,
            } => FiniteGroup::generate_with_cap(degree, generators.clone(), cap),
            GroupSpec::DirectProduct(ref a, ref b) => {
                let a = a.build_with_cap(cap)?;
                let b = b.build_with_cap(cap)?;
                Ok(direct_product_with_cap(&a, &b, cap)?.group)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Quaternion(n) => write!(f, "Q({n})"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E({p},{k})"),
            GroupSpec::Frobenius { p, d, m: None } => write!(f, "F({p},{d})"),
            GroupSpec::Frobenius { p, d, m: Some(m) } => write!(f, "F({p},{d};{m})"),
            GroupSpec::CyclicSemidirect { n, d, k } => write!(f, "C({n}):C({d})@{k}"),
            GroupSpec::Raw { generators, .. } => {
                f.write_str("Perm[")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str("]")
            }
            GroupSpec::DirectProduct(a, b) => {
                let wrap = |s: &GroupSpec| matches!(s, GroupSpec::DirectProduct(..));
                write!(f, "{a} x ")?;
                if wrap(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

/// Builds a group from its description with the default element cap.
pub fn standard_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    spec.build()
}

fn cycle_perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("constructor cycles are valid")
}

fn images_perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructor images are a bijection")
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let gens = if n > 1 {
        vec![cycle_perm(n, &[(0..n).collect()])]
    } else {
        vec![]
    };
    FiniteGroup::generate(n, gens)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle_perm(n, &[(0..n).collect()]));
    }
    if n >= 2 {
        gens.push(cycle_perm(n, &[vec![0, 1]]));
    }
    FiniteGroup::generate(n, gens)
}

fn alternating(n: usize) -> Result<FiniteGroup> {
    let gens = (2..n).map(|k| cycle_perm(n, &[vec![0, 1, k]])).collect();
    FiniteGroup::generate(n, gens)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let m = n / 2;
    if m == 2 {
        let gens = vec![
            cycle_perm(4, &[vec![0, 1], vec![2, 3]]),
            cycle_perm(4, &[vec![0, 2], vec![1, 3]]),
        ];
        return FiniteGroup::generate(4, gens);
    }
    let rotation = cycle_perm(m, &[(0..m).collect()]);
    let reflection = images_perm((0..m).map(|i| (m - i) % m).collect());
    FiniteGroup::generate(m, vec![rotation, reflection])
}

/// Right regular representation of ⟨a, b | a^h, b² = a^{h/2}, aᵇ = a⁻¹⟩.
fn quaternion(n: usize) -> Result<FiniteGroup> {
    let h = n / 2;
    let point = |i: usize, j: usize| (i % h) + j * h;
    let mut times_a = vec![0; n];
    let mut times_b = vec![0; n];
    for i in 0..h {
        times_a[point(i, 0)] = point(i + 1, 0);
        times_a[point(i, 1)] = point(i + h - 1, 1);
        times_b[point(i, 0)] = point(i, 1);
        times_b[point(i, 1)] = point(i + h / 2, 0);
    }
    FiniteGroup::generate(n, vec![images_perm(times_a), images_perm(times_b)])
}

fn elementary_abelian(p: usize, k: usize, cap: usize) -> Result<FiniteGroup> {
    let degree = p * k;
    let gens = (0..k)
        .map(|i| cycle_perm(degree, &[(i * p..(i + 1) * p).collect()]))
        .collect();
    FiniteGroup::generate_with_cap(degree, gens, cap)
}

fn check_semidirect(n: usize, d: usize, k: usize) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "semidirect factors must have order at least 1".into(),
        ));
    }
    if n > 1 && k.gcd(&n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "gcd({k}, {n}) != 1, so x -> x^{k} is not an automorphism of C({n})"
        )));
    }
    let ord = arith::multiplicative_order(k as u64, n as u64).unwrap_or(0) as usize;
    if ord != d {
        return Err(Error::InvalidParameter(format!(
            "multiplicative order of {k} mod {n} is {ord}, not {d}"
        )));
    }
    Ok(())
}

/// C_n ⋊ C_d acting on the points of Z_n by `x ↦ x + 1` and `x ↦ kx`.
pub fn cyclic_semidirect(n: usize, d: usize, k: usize) -> Result<FiniteGroup> {
    check_semidirect(n, d, k)?;
    let shift = images_perm((0..n).map(|x| (x + 1) % n).collect());
    let scale = images_perm((0..n).map(|x| x * k % n).collect());
    FiniteGroup::generate(n, vec![shift, scale])
}

/// Resolves the field degree: the explicit `m`, or the least `m` with
/// `d | p^m - 1`.
fn frobenius_parameters(p: usize, d: usize, m: Option<usize>) -> Result<usize> {
    if !arith::is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if d < 2 {
        return Err(Error::InvalidParameter(
            "Frobenius complement order must be at least 2".into(),
        ));
    }
    if p.gcd(&d) != 1 {
        return Err(Error::InvalidParameter(format!("gcd({p}, {d}) != 1")));
    }
    let m = match m {
        Some(m) => m,
        None => arith::multiplicative_order(p as u64, d as u64).expect("coprime") as usize,
    };
    if m == 0 {
        return Err(Error::InvalidParameter(
            "field degree must be at least 1".into(),
        ));
    }
    let q = (p as u128).pow(m as u32);
    if !(q - 1).is_multiple_of(d as u128) {
        return Err(Error::InvalidParameter(format!(
            "{d} does not divide {p}^{m} - 1"
        )));
    }
    Ok(m)
}

pub fn frobenius_fpd(p: usize, d: usize, m: Option<usize>) -> Result<FiniteGroup> {
    frobenius_fpd_with_cap(p, d, m, DEFAULT_ELEMENT_CAP)
}

/// The additive group of GF(p^m) extended by multiplication with the least
/// field element (in coefficient encoding) of multiplicative order `d`.
pub fn frobenius_fpd_with_cap(
    p: usize,
    d: usize,
    m: Option<usize>,
    cap: usize,
) -> Result<FiniteGroup> {
    let m = frobenius_parameters(p, d, m)?;
    let size = (p as u128).pow(m as u32);
    if size.saturating_mul(d as u128) > cap as u128 {
        return Err(Error::ElementCapExceeded { cap });
    }
    let field = PrimeField::new(p, m);
    let size = size as usize;
    let lambda = field
        .element_of_order(d)
        .expect("d | p^m - 1 so the cyclic multiplicative group has such an element");
    let mut gens: Vec<Permutation> = (0..m)
        .map(|i| {
            let e = p.pow(i as u32);
            images_perm((0..size).map(|v| field.add(v, e)).collect())
        })
        .collect();
    gens.push(images_perm(
        (0..size).map(|v| field.mul(v, lambda)).collect(),
    ));
    FiniteGroup::generate_with_cap(size, gens, cap)
}

/// GF(p^m) with elements encoded as `Σ c_i p^i`, reduced modulo the
/// lexicographically least monic irreducible polynomial of degree `m`.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: usize,
    m: usize,
    /// Low coefficients of the modulus (the leading 1 is implicit).
    modulus: Vec<usize>,
}

impl PrimeField {
    pub fn new(p: usize, m: usize) -> Self {
        let count = p.pow(m as u32);
        let modulus = (0..count)
            .map(|code| digits(code, p, m))
            .find(|low| {
                let mut poly = low.clone();
                poly.push(1);
                is_irreducible(&poly, p)
            })
            .expect("irreducible polynomials exist in every degree");
        PrimeField { p, m, modulus }
    }

    pub fn modulus(&self) -> Vec<usize> {
        let mut poly = self.modulus.clone();
        poly.push(1);
        poly
    }

    pub fn size(&self) -> usize {
        self.p.pow(self.m as u32)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (digits(a, self.p, self.m), digits(b, self.p, self.m));
        let sum: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        undigits(&sum, self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (p, m) = (self.p, self.m);
        let (x, y) = (digits(a, p, m), digits(b, p, m));
        let mut prod = vec![0; 2 * m];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        // x^m ≡ -Σ modulus_i x^i
        for top in (m..2 * m).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &mi) in self.modulus.iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + p - (c * mi) % p) % p;
            }
        }
        undigits(&prod[..m], p)
    }

    pub fn pow(&self, a: usize, mut e: usize) -> usize {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn multiplicative_order(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let n = self.size() - 1;
        let mut order = n;
        for q in arith::prime_divisors(n as u64) {
            let q = q as usize;
            while order.is_multiple_of(q) && self.pow(a, order / q) == 1 {
                order /= q;
            }
        }
        Some(order)
    }

    /// Least nonzero element (by encoding) of multiplicative order `d`.
    pub fn element_of_order(&self, d: usize) -> Option<usize> {
        (1..self.size()).find(|&a| self.multiplicative_order(a) == Some(d))
    }
}

fn digits(mut code: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `num` modulo the monic polynomial `den` (coefficients low
/// to high).
fn poly_rem(num: &[usize], den: &[usize], p: usize) -> Vec<usize> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let c = r.pop().unwrap();
        if c == 0 {
            continue;
        }
        let shift = r.len() - dd;
        for (i, &di) in den[..dd].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (c * di) % p) % p;
        }
    }
    r
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return true;
    }
    (1..=deg / 2).all(|k| {
        (0..p.pow(k as u32)).all(|code| {
            let mut f = digits(code, p, k);
            f.push(1);
            poly_rem(poly, &f, p).iter().any(|&c| c != 0)
        })
    })
}

/// A direct product with its two canonical factor embeddings.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub left: Subgroup,
    pub right: Subgroup,
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<DirectProduct> {
    direct_product_with_cap(a, b, DEFAULT_ELEMENT_CAP)
}

/// A × B acting on the disjoint union of the two point sets.
pub fn direct_product_with_cap(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: usize,
) -> Result<DirectProduct> {
    if a.order().saturating_mul(b.order()) > cap {
        return Err(Error::ElementCapExceeded { cap });
    }
    let degree = a.degree() + b.degree();
    let left_gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| g.shifted(0, degree))
        .collect();
    let right_gens: Vec<Permutation> = b
        .generators()
        .iter()
        .map(|g| g.shifted(a.degree(), degree))
        .collect();
    let gens: Vec<Permutation> = left_gens.iter().chain(&right_gens).cloned().collect();
    let group = FiniteGroup::generate_with_cap(degree, gens, cap)?;
    let left = group.join_subgroup(&left_gens)?;
    let right = group.join_subgroup(&right_gens)?;
    Ok(DirectProduct { group, left, right })
}
