//! Hurewicz images of image-of-J classes and the divisibility decision
//! procedure.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Family, Generator};
use crate::models::qs0::{hopf_class, q_words, theta_delta, HOPF_DEGREES};
use crate::models::so::{compute_primitive, primitive_space};
use crate::ops;
use crate::{AlgebraModel, Error, Polynomial, Result, VerificationReport};

/// Per-degree data for the image of `J: π_*SO → π_*^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImJEntry {
    pub in_image: bool,
    /// Whether the Hurewicz image of the class is nonzero.
    pub hurewicz_nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImJTable {
    entries: BTreeMap<u32, ImJEntry>,
}

impl ImJTable {
    /// Image of J in degrees `≡ 0, 1, 3, 7 (mod 8)`, detected by the
    /// Hurewicz map only in degrees 1, 3 and 7.
    pub fn standard(max_degree: u32) -> Self {
        let entries = (1..=max_degree)
            .filter(|d| matches!(d % 8, 0 | 1 | 3 | 7))
            .map(|d| (d, ImJEntry { in_image: true, hurewicz_nonzero: HOPF_DEGREES.contains(&d) }))
            .collect();
        ImJTable { entries }
    }

    /// Builds a table from explicit entries. A nonzero Hurewicz image is
    /// only accepted in the Hopf degrees.
    pub fn from_entries(entries: impl IntoIterator<Item = (u32, ImJEntry)>) -> Result<Self> {
        let entries: BTreeMap<u32, ImJEntry> = entries.into_iter().collect();
        for (d, e) in &entries {
            if *d == 0 || (e.hurewicz_nonzero && (!e.in_image || !HOPF_DEGREES.contains(d))) {
                return Err(Error::UnsupportedConfig(format!("ImJ entry for degree {d}: {e:?}")));
            }
        }
        Ok(ImJTable { entries })
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, ImJEntry)> + '_ {
        self.entries.iter().map(|(d, e)| (*d, *e))
    }

    pub fn in_image(&self, d: u32) -> bool {
        self.entries.get(&d).is_some_and(|e| e.in_image)
    }

    pub fn hurewicz_nonzero(&self, d: u32) -> bool {
        self.entries.get(&d).is_some_and(|e| e.in_image && e.hurewicz_nonzero)
    }

    fn require(&self, d: u32) -> Result<()> {
        if self.in_image(d) {
            Ok(())
        } else {
            Err(Error::NotInImageOfJ(d))
        }
    }
}

/// A stable stem class together with what is known about its Hurewicz image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemClass {
    pub degree: u32,
    pub in_image_of_j: bool,
    pub is_hopf: bool,
    /// `η²`, `ν²`, `σ²`.
    pub is_kervaire_square: bool,
    pub hurewicz: Option<Polynomial>,
}

/// The generator of the image of J in degree `d`.
pub fn image_of_j_class(d: u32, table: &ImJTable, frag: &AlgebraModel) -> Result<StemClass> {
    let h = hur_of_j(d, table, frag)?;
    Ok(StemClass {
        degree: d,
        in_image_of_j: true,
        is_hopf: HOPF_DEGREES.contains(&d),
        is_kervaire_square: false,
        hurewicz: Some(h),
    })
}

/// The square of the Hopf class of degree `d`.
pub fn hopf_square(d: u32, frag: &AlgebraModel) -> Result<StemClass> {
    let h = hopf_class(d)?;
    Ok(StemClass {
        degree: 2 * d,
        in_image_of_j: false,
        is_hopf: false,
        is_kervaire_square: true,
        hurewicz: Some(theta_delta(d, &h, frag)?),
    })
}

/// Hurewicz image of the image-of-J class of degree `d`, moved to
/// component 0: `Q^1[1]*[-2]`, `θ_3*[-1]`, `θ_7*[-1]` in the Hopf degrees
/// and 0 elsewhere.
pub fn hur_of_j(d: u32, table: &ImJTable, _frag: &AlgebraModel) -> Result<Polynomial> {
    table.require(d)?;
    if table.hurewicz_nonzero(d) {
        hopf_class(d)
    } else {
        Ok(Polynomial::zero())
    }
}

/// A formal spherical primitive of degree `t` in component 0.
pub fn spherical(t: u32) -> Polynomial {
    Polynomial::generator(Generator::new(Family::Spherical, vec![t], t))
}

/// `x ∘ a` for `a` the Hurewicz image of a stem class of degree `t`.
///
/// For `t ∈ {1, 3, 7}` this is `Δ_{p_t} x`. Otherwise `a` is a formal
/// spherical primitive `s_t`: `[c] ∘ a = c·a`, `Q^I[1] * [c] ∘ a = Q^I(a)`,
/// and a product of two positive-degree classes composes to 0.
pub fn compose_with_spherical(x: &Polynomial, t: u32, frag: &AlgebraModel) -> Result<Polynomial> {
    if t == 0 {
        return Err(Error::UnsupportedShape("composition with a degree-0 class".into()));
    }
    if HOPF_DEGREES.contains(&t) {
        return theta_delta(t, x, frag);
    }
    let a = spherical(t);
    let mut out = Polynomial::zero();
    for term in x.terms() {
        let positive: u32 = term.factors().iter().map(|(_, e)| e).sum();
        match (positive, term.factors().first()) {
            (0, _) => {
                if term.component().rem_euclid(2) == 1 {
                    out += a.clone();
                }
            }
            (1, Some((g, _))) if g.family() == Family::QWord => {
                let mut v = a.clone();
                for i in g.indices().iter().rev() {
                    v = ops::q_upper(*i, &v, frag)?;
                }
                out += v;
            }
            (1, Some((g, _))) => return Err(Error::UnsupportedShape(format!("{g} ∘ s_{t}"))),
            _ => {}
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Detected,
    Annihilated,
    OutOfScope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Reason {
    /// `ψ` is a Hopf class, detected by the Hurewicz map.
    HopfClass,
    /// `ψ²` for a Hopf class `ψ`: `hur(ψ²) = Δ_{p}(hur ψ) ≠ 0`.
    HopfSquare,
    /// `hur(ψ) = 0` by the computation of the Hurewicz map on `π_*SO`.
    HurewiczSo,
    /// `Q^i z = 0` for `i < |z|`.
    Unstability,
    /// `Δ_p ∘ Δ_p = 0`.
    BvSquaredZero,
    /// `Δ_p` of an odd primitive kills Pontryagin squares.
    OddClassKillsSquares,
    /// Resolved from the list of low-degree generators.
    LowDegreeLookup,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::HopfClass => "hopf-class",
            Reason::HopfSquare => "hopf-square",
            Reason::HurewiczSo => "hurewicz-so",
            Reason::Unstability => "unstability",
            Reason::BvSquaredZero => "bv-squared-zero",
            Reason::OddClassKillsSquares => "odd-class-kills-squares",
            Reason::LowDegreeLookup => "low-degree-lookup",
        }
    }
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Detected => "detected",
            Verdict::Annihilated => "annihilated",
            Verdict::OutOfScope => "out-of-scope",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
}

/// Whether `ψ∘θ` (`θ` of degree `theta_degree`, 0 meaning `ψ` itself) has
/// nonzero Hurewicz image, for `ψ` the image-of-J class of degree `psi_degree`.
pub fn check_divisible(psi_degree: u32, theta_degree: u32, table: &ImJTable) -> Result<Decision> {
    use Reason::*;
    table.require(psi_degree)?;
    let d = |verdict, reasons: &[Reason]| Ok(Decision { verdict, reasons: reasons.to_vec() });
    if !table.hurewicz_nonzero(psi_degree) {
        return d(Verdict::Annihilated, &[HurewiczSo]);
    }
    let p = psi_degree;
    match theta_degree {
        0 => d(Verdict::Detected, &[HopfClass]),
        t if t == p => d(Verdict::Detected, &[HopfSquare]),
        t if t == 2 * p => d(Verdict::Annihilated, &[BvSquaredZero, OddClassKillsSquares]),
        t if t > p => d(Verdict::Annihilated, &[Unstability]),
        _ => d(Verdict::OutOfScope, &[LowDegreeLookup]),
    }
}

fn is_square(p: &Polynomial) -> bool {
    p.terms().all(|t| t.factors().iter().all(|(_, e)| e % 2 == 0))
}

fn nonzero(p: &Polynomial) -> &'static str {
    if p.is_zero() {
        "0"
    } else {
        "nonzero"
    }
}

/// Replays the Hurewicz computations: the Hopf classes and their squares
/// are detected, the cubes and `ηθ` (`|θ| ≥ 2`) are not.
pub fn reproduce_paper_computations(frag: &AlgebraModel, table: &ImJTable) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("hurewicz").with_param("model", &frag.name);
    let names = [(1, "η"), (3, "ν"), (7, "σ")];
    for (d, name) in names {
        let h = hur_of_j(d, table, frag)?;
        r.compare(format!("hur({name})"), hopf_class(d)?, &h);
        let sq = compose_with_spherical(&h, d, frag)?;
        let expected = if d == 1 { h.square() } else { hopf_class(d)?.square() };
        r.compare(format!("hur({name}²)"), &expected, &sq);
        r.compare(format!("hur({name}²) ≠ 0"), "nonzero", nonzero(&sq));
        // First argument: Δ_p ∘ Δ_p = 0, checked on every generator where
        // the fragment's action tables reach.
        let mut bv2 = Polynomial::zero();
        let mut checked = 0;
        for g in frag.generators() {
            let x = Polynomial::generator(g.clone());
            match theta_delta(d, &x, frag).and_then(|y| theta_delta(d, &y, frag)) {
                Ok(z) => {
                    bv2 += z;
                    checked += 1;
                }
                Err(Error::MissingActionTable { .. } | Error::UnsupportedShape(_)) => {}
                Err(e) => return Err(e),
            }
        }
        r.compare(format!("Δ_p{d}∘Δ_p{d} on {checked} generators"), "0", nonzero(&bv2));
        // Second argument: hur(ψ²) is a square and Δ_p kills squares.
        r.compare(format!("hur({name}²) is a square"), "true", is_square(&sq));
        let mut on_squares = Polynomial::zero();
        for g in frag.generators() {
            on_squares += theta_delta(d, &Polynomial::generator(g.clone()).square(), frag)?;
        }
        r.compare(format!("Δ_p{d} on squares of generators"), "0", nonzero(&on_squares));
        let cube = compose_with_spherical(&sq, d, frag)?;
        r.compare(format!("hur({name}³)"), "0", cube);
    }
    let eta = hur_of_j(1, table, frag)?;
    for t in 2..=16 {
        r.compare(format!("hur(ηθ), |θ| = {t}"), "0", compose_with_spherical(&eta, t, frag)?);
    }
    for w in q_words(7, 3) {
        let word = Polynomial::generator(Generator::new(Family::QWord, w.clone(), w.iter().sum()));
        for t in 8..=16 {
            r.compare(format!("{word} ∘ s_{t}"), "0", compose_with_spherical(&word, t, frag)?);
        }
    }
    for d in 1..=16 {
        if table.in_image(d) && !table.hurewicz_nonzero(d) {
            r.compare(format!("hur(J_{d})"), "0", hur_of_j(d, table, frag)?);
        }
    }
    let p7 = compute_primitive(7, 8);
    let unique = primitive_space(7, 8).len() == 1;
    r.record("p_7 in H_*SO(8)", "unique nonzero primitive", &p7, unique && !p7.is_zero());
    Ok(r)
}

/// `hur(ψ∘θ) = hur(ψ) ∘ hur(θ)` for `ψ` in the image of J.
pub fn hur_composite(psi_degree: u32, theta_degree: u32, table: &ImJTable, frag: &AlgebraModel) -> Result<Polynomial> {
    let h = hur_of_j(psi_degree, table, frag)?;
    if theta_degree == 0 {
        return Ok(h);
    }
    compose_with_spherical(&h, theta_degree, frag)
}

pub fn describe(decision: &Decision) -> String {
    let reasons: Vec<&str> = decision.reasons.iter().map(|r| r.as_str()).collect();
    format!("{} ({})", decision.verdict.as_str(), reasons.join(", "))
}
