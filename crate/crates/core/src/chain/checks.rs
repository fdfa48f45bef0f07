//! The oracle checks: each one builds the relevant cellular complexes and
//! compares induced maps on homology with the closed formulas.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::cells::{build_so_cells, cell_label, so_act, so_action_is_chain_map, top_class_hit, LemmaVariant, SphereCell};
use super::complex::{induced_map, is_chain_map};
use super::square::{unquotiented, Canon, Coefficients, ExtendedSquare, SquareCell};
use crate::linalg::BitVec;
use crate::models::formal::{formal_model, formal_x};
use crate::ops;
use crate::{Error, Polynomial, Result, VerificationReport};

pub const CHECKS: [&str; 6] = ["basis-formula", "zeta-xi", "a1-bar", "psi", "phi-with-gamma", "calculfinal-composite"];

/// Parameters of an oracle run: the number of disks `n`, the degrees of the
/// coefficient generators, the degree of the formal class `x` used by the
/// module-level checks, and the reading of the cellular action lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleParams {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub base: u32,
    pub lemma: LemmaVariant,
}

impl OracleParams {
    pub fn new(n: u32) -> Self {
        OracleParams { n, degrees: vec![1, 1, 2], base: 1, lemma: LemmaVariant::Proof }
    }

    pub fn with_degrees(mut self, degrees: &[u32]) -> Self {
        self.degrees = degrees.to_vec();
        self
    }

    pub fn with_base(mut self, base: u32) -> Self {
        self.base = base;
        self
    }

    pub fn with_lemma(mut self, lemma: LemmaVariant) -> Self {
        self.lemma = lemma;
        self
    }
}

pub fn oracle_check(id: &str, p: &OracleParams) -> Result<VerificationReport> {
    let needs_so = !matches!(id, "basis-formula" | "zeta-xi");
    if p.n == 0 || (needs_so && p.n < 2) {
        return Err(Error::UnsupportedConfig(format!("{id} needs n ≥ {}", if needs_so { 2 } else { 1 })));
    }
    let report = VerificationReport::new(id)
        .with_param("n", p.n)
        .with_param("degrees", join(p.degrees.iter().map(ToString::to_string), ","))
        .with_param("base", p.base)
        .with_param("lemma", if p.lemma == LemmaVariant::Proof { "proof" } else { "literal" });
    match id {
        "basis-formula" => basis_formula(report, p),
        "zeta-xi" => zeta_xi(report, p),
        "a1-bar" => a1_bar(report, p),
        "psi" => psi(report, p),
        "phi-with-gamma" => phi_with_gamma(report, p),
        "calculfinal-composite" => calculfinal(report, p),
        _ => Err(Error::UnsupportedConfig(format!("unknown check {id}"))),
    }
}

fn join(it: impl Iterator<Item = String>, sep: &str) -> String {
    it.collect::<Vec<_>>().join(sep)
}

fn show_canon(sq: &ExtendedSquare, c: Canon) -> String {
    let l = &sq.coeff.labels;
    match c {
        Canon::P(a, b) => format!("[e^0⊗{}⊗{}]", l[a], l[b]),
        Canon::B(a, b) => format!("[e^{}⊗{}⊗{}]", sq.m, l[a], l[b]),
        Canon::KA(k, a) => format!("[e^{k}⊗{}⊗{}]", l[a], l[a]),
    }
}

fn show(sq: &ExtendedSquare, classes: Option<&[Canon]>) -> String {
    match classes {
        None => "not a canonical combination".into(),
        Some([]) => "0".into(),
        Some(cs) => join(cs.iter().map(|c| show_canon(sq, *c)), " + "),
    }
}

fn sorted(mut v: Vec<Canon>) -> Vec<Canon> {
    v.sort();
    v
}

/// Toggles `x` in a set, i.e. adds it mod 2.
fn toggle<T: Ord>(set: &mut BTreeSet<T>, x: T) {
    if !set.remove(&x) {
        set.insert(x);
    }
}

// ---------------------------------------------------------------------------
// basis-formula

fn basis_formula(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let sq = ExtendedSquare::new(p.n, Coefficients::generators(&p.degrees))?;
    r.compare("d∘d = 0", "ok", status(sq.complex.check()));
    let u = unquotiented(&sq);
    r.compare("T² = 1, Td = dT", "ok", status(u.complex.check()));
    r.compare("quotient is a chain map", "ok", status(is_chain_map(&u.quotient, &u.complex, &sq.complex)));

    let basis = sq.canonical_basis();
    let dims = sq.homology().dims();
    for (deg, dim) in dims.iter().enumerate() {
        let expected = basis.iter().filter(|c| sq.canon_degree(**c) == deg).count();
        r.compare(format!("dim H_{deg}"), expected, dim);
    }
    for c in &basis {
        let (deg, v) = sq.canon_chain(*c);
        let got = sq.decompose(deg, &v);
        r.compare(format!("representative {}", show_canon(&sq, *c)), show_canon(&sq, *c), show(&sq, got.as_deref()));
    }
    // Q_k is quadratic with the bracket as defect, and {x,x} = 0.
    let n = sq.coeff.len();
    for a in 0..n {
        let (_, xx) = sq.bracket_chain(&[a], &[a]).expect("nonempty");
        r.compare(format!("{{{0},{0}}}", sq.coeff.labels[a]), "0", if xx.is_zero() { "0" } else { "nonzero" });
        for b in a + 1..n {
            if sq.coeff.degrees[a] != sq.coeff.degrees[b] {
                continue;
            }
            for k in 0..=sq.m {
                let (deg, v) = sq.tensor(k, &[a, b], &[a, b]).expect("nonempty");
                let mut expected = vec![Canon::KA(k, a), Canon::KA(k, b)];
                if k == sq.m {
                    expected.push(Canon::B(a, b));
                }
                let expected = sorted(expected);
                let got = sq.decompose(deg, &v).map(sorted);
                let input = format!("[e^{k}⊗({0}+{1})⊗({0}+{1})]", sq.coeff.labels[a], sq.coeff.labels[b]);
                r.compare(input, show(&sq, Some(&expected)), show(&sq, got.as_deref()));
            }
        }
    }
    Ok(r)
}

fn status(res: Result<()>) -> String {
    match res {
        Ok(()) => "ok".into(),
        Err(e) => e.to_string(),
    }
}

// ---------------------------------------------------------------------------
// zeta-xi

fn zeta_xi(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let sq = ExtendedSquare::new(p.n, Coefficients::generators(&p.degrees))?;
    let u = unquotiented(&sq);
    r.compare("ζ is a chain map", "ok", status(is_chain_map(&u.quotient, &u.complex, &sq.complex)));
    let m = sq.m;
    let n = sq.coeff.len();
    let l = &sq.coeff.labels;
    for i in 0..n {
        for j in 0..n {
            for top in [false, true] {
                let k = if top { m } else { 0 };
                let deg = sq.cell_degree((k, i, j));
                let mut v = BitVec::zeros(u.cells[deg].len());
                for tw in if top { &[false, true][..] } else { &[false][..] } {
                    let pos = u.cells[deg].iter().position(|c| *c == (*tw, k, i, j)).expect("cell");
                    v.flip(pos);
                }
                let input = format!("ζ(b_{k}⊗{}⊗{})", l[i], l[j]);
                if !u.complex.is_cycle(deg, &v) {
                    r.record(input, "cycle", "not a cycle", false);
                    continue;
                }
                let expected = match (top, i == j) {
                    (false, false) => vec![Canon::P(i.min(j), i.max(j))],
                    (false, true) => vec![Canon::KA(0, i)],
                    (true, false) => vec![Canon::B(i.min(j), i.max(j))],
                    (true, true) => vec![],
                };
                let got = sq.decompose(deg, &u.quotient[deg].apply(&v));
                r.compare(input, show(&sq, Some(&expected)), show(&sq, got.as_deref()));
            }
        }
    }
    for c in sq.canonical_basis() {
        let expected: BTreeSet<(usize, usize)> = match c {
            Canon::B(a, b) => [(a, b), (b, a)].into_iter().collect(),
            Canon::KA(k, a) if k == m => [(a, a)].into_iter().collect(),
            _ => BTreeSet::new(),
        };
        let (deg, v) = sq.canon_chain(c);
        let got = sq.xi(deg, &v);
        let fmt = |s: &BTreeSet<(usize, usize)>| {
            if s.is_empty() {
                "0".to_string()
            } else {
                join(s.iter().map(|(a, b)| format!("b_{m}⊗{}⊗{}", l[*a], l[*b])), " + ")
            }
        };
        r.compare(format!("ξ{}", show_canon(&sq, c)), fmt(&expected), fmt(&got));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// a1-bar

fn sphere_mask(i: u32) -> u32 {
    if i == 0 {
        0
    } else {
        1 << i
    }
}

/// Chain-level action of the cell `d^S` on the extended square.
fn act(sq: &ExtendedSquare, lemma: LemmaVariant, mask: u32, deg: usize, v: &BitVec) -> (usize, BitVec) {
    let shift = ops::degree_of_mask(mask) as usize;
    let mut cells: Vec<SquareCell> = Vec::new();
    for pos in v.ones() {
        let (k, a, b) = sq.cells(deg)[pos];
        for c in so_act(lemma, mask, SphereCell::e(k)) {
            cells.push(if c.twisted { (c.k, b, a) } else { (c.k, a, b) });
        }
    }
    (deg + shift, sq.chain(deg + shift, cells))
}

fn a1_bar(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let n = p.n;
    let sq = ExtendedSquare::new(n - 1, Coefficients::generators(&p.degrees))?;
    let m = sq.m;
    r.compare("cellular action is a chain map", "true", so_action_is_chain_map(n, p.lemma));
    r.compare(format!("d^{m}.e^0 = e^{m} + Te^{m}"), "true", top_class_hit(n, p.lemma));
    let x = 0;
    let y = (sq.coeff.len() > 1).then_some(1);
    for i in 0..n {
        for j in 0..=m {
            let mut cases = vec![(Canon::KA(j, x), if i == 0 { vec![Canon::KA(j, x)] } else { vec![] })];
            if let Some(y) = y {
                if j == 0 {
                    let expected = match i {
                        0 => vec![Canon::P(x, y)],
                        _ if i == m => vec![Canon::B(x, y)],
                        _ => vec![],
                    };
                    cases.push((Canon::P(x, y), expected));
                }
                if j == m {
                    cases.push((Canon::B(x, y), if i == 0 { vec![Canon::B(x, y)] } else { vec![] }));
                }
            }
            for (class, expected) in cases {
                let (deg, v) = sq.canon_chain(class);
                let (deg2, w) = act(&sq, p.lemma, sphere_mask(i), deg, &v);
                let got = sq.decompose(deg2, &w).map(sorted);
                let input = format!("ā₁(d_{i}⊗{})", show_canon(&sq, class));
                r.compare(input, show(&sq, Some(&expected)), show(&sq, got.as_deref()));
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// shared: cells of SO(n), the Pascal Sq oracle, the diagonal, X × Y

fn so_masks(n: u32) -> Vec<u32> {
    build_so_cells(n).masks.into_iter().flatten().collect()
}

fn pascal_row(a: u32) -> Vec<bool> {
    let mut row = vec![true];
    for _ in 0..a {
        let mut next = vec![true; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] ^ row[k];
        }
        row = next;
    }
    row
}

fn pascal(a: u32, b: u32) -> bool {
    b <= a && pascal_row(a)[b as usize]
}

/// Exterior product of cells, `None` when a generator repeats.
fn ext_mul(a: u32, b: u32) -> Option<u32> {
    (a & b == 0).then_some(a | b)
}

fn bits(mask: u32) -> Vec<u32> {
    (1..32).filter(|b| mask & (1 << b) != 0).collect()
}

/// `Sq^k_*` on a cell of `SO(n)`: `Sq^k_* d_i = C(i-k, k) d_{i-k}` from the
/// homology of projective space, extended by the Cartan formula.
pub fn sq_pascal(k: u32, mask: u32) -> BTreeSet<u32> {
    fn go(k: u32, bits: &[u32], acc: u32, out: &mut BTreeSet<u32>) {
        let Some((&b, rest)) = bits.split_first() else {
            if k == 0 {
                toggle(out, acc);
            }
            return;
        };
        for kk in 0..=k.min(b) {
            if !pascal(b - kk, kk) {
                continue;
            }
            if let Some(next) = ext_mul(acc, sphere_mask(b - kk)) {
                go(k - kk, rest, next, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(k, &bits(mask), 0, &mut out);
    out
}

/// `D_*` on a cell: multiplicative, with `D_* d_i = Σ_{a+b=i} d_a ⊗ d_b`.
pub fn diagonal_oracle(mask: u32) -> BTreeSet<(u32, u32)> {
    let mut cur: BTreeSet<(u32, u32)> = [(0, 0)].into_iter().collect();
    for b in bits(mask) {
        let mut next = BTreeSet::new();
        for &(l, r) in &cur {
            for a in 0..=b {
                if let (Some(l2), Some(r2)) = (ext_mul(l, sphere_mask(a)), ext_mul(r, sphere_mask(b - a))) {
                    toggle(&mut next, (l2, r2));
                }
            }
        }
        cur = next;
    }
    cur
}

/// Coefficients `C(X) ⊗ C(Y)` with `X = SO(n)`; cell `(S, y)` has index
/// `pos(S) * |Y| + y`.
struct Product {
    masks: Vec<u32>,
    ny: usize,
}

impl Product {
    fn idx(&self, mask: u32, y: usize) -> usize {
        self.masks.iter().position(|m| *m == mask).expect("cell") * self.ny + y
    }

    fn coefficients(&self, y_labels: &[String], y_degrees: &[u32]) -> Coefficients {
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        for &s in &self.masks {
            for y in 0..self.ny {
                labels.push(if s == 0 { y_labels[y].clone() } else { format!("{}·{}", cell_label(s), y_labels[y]) });
                degrees.push(ops::degree_of_mask(s) + y_degrees[y]);
            }
        }
        Coefficients::zero_differential(labels, degrees)
    }
}

/// The closed formula for `φ_*(α ⊗ [e^r ⊗ y ⊗ y])`, as a chain of the
/// extended square of `X × Y`.
fn phi_chain(sq: &ExtendedSquare, prod: &Product, alpha: u32, r: u32, y: usize) -> (usize, BitVec) {
    let a = ops::degree_of_mask(alpha);
    let deg = (r + a + 2 * sq.coeff.degrees[prod.idx(0, y)]) as usize;
    let mut total = BitVec::zeros(sq.cells(deg).len());
    let mut add = |part: Option<(usize, BitVec)>| {
        if let Some((d, v)) = part {
            debug_assert_eq!(d, deg);
            total.xor_assign(&v);
        }
    };
    for i in 0..=a {
        if r + 2 * i < a || r + 2 * i - a > sq.m {
            continue;
        }
        let u: Vec<usize> = sq_pascal(i, alpha).into_iter().map(|s| prod.idx(s, y)).collect();
        add(sq.tensor(r + 2 * i - a, &u, &u));
    }
    if r == sq.m {
        for (s1, s2) in diagonal_oracle(alpha) {
            if s1 < s2 {
                add(sq.bracket_chain(&[prod.idx(s1, y)], &[prod.idx(s2, y)]));
            }
        }
    }
    (deg, total)
}

fn gen_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

fn show_pairs(sq: &ExtendedSquare, s: &BTreeSet<(usize, usize)>) -> String {
    if s.is_empty() {
        return "0".into();
    }
    let l = &sq.coeff.labels;
    join(s.iter().map(|(a, b)| format!("b_{}⊗{}⊗{}", sq.m, l[*a], l[*b])), " + ")
}

/// The free module `Z = H_*SO(n) ⊗ x` and `X × Z`, with their squares and
/// the action map `ψ: (d_S, d_T x) ↦ d_S d_T x`.
struct ModuleSetup {
    z: Product,
    xz: Product,
    sq_z: ExtendedSquare,
    sq_xz: ExtendedSquare,
}

impl ModuleSetup {
    fn new(n: u32, base: u32) -> Result<Self> {
        let masks = so_masks(n);
        let z = Product { masks: masks.clone(), ny: 1 };
        let zc = z.coefficients(&["x".to_string()], &[base]);
        let xz = Product { masks: masks.clone(), ny: masks.len() };
        let xzc = xz.coefficients(&zc.labels, &zc.degrees);
        let sq_z = ExtendedSquare::new(n - 1, zc)?;
        let sq_xz = ExtendedSquare::new(n - 1, xzc)?;
        Ok(ModuleSetup { z, xz, sq_z, sq_xz })
    }

    fn psi_cell(&self, idx: usize) -> Option<usize> {
        let s = self.xz.masks[idx / self.xz.ny];
        let t = self.xz.masks[idx % self.xz.ny];
        ext_mul(s, t).map(|u| self.z.idx(u, 0))
    }

    fn psi_map(&self) -> super::complex::ChainMap {
        self.sq_xz.square_map(&self.sq_z, |i| self.psi_cell(i).into_iter().collect())
    }
}

// ---------------------------------------------------------------------------
// psi

fn psi(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let setup = ModuleSetup::new(p.n, p.base)?;
    let map = setup.psi_map();
    let (src, tgt) = (&setup.sq_xz, &setup.sq_z);
    r.compare("ψ is a chain map", "ok", status(induced_map(&map, &src.complex, &tgt.complex).map(|_| ())));
    let pair = |a: usize, b: usize| (a.min(b), a.max(b));
    for c in src.canonical_basis() {
        let expected = match c {
            Canon::P(a, b) => match (setup.psi_cell(a), setup.psi_cell(b)) {
                (Some(u), Some(v)) if u == v => vec![Canon::KA(0, u)],
                (Some(u), Some(v)) => vec![Canon::P(pair(u, v).0, pair(u, v).1)],
                _ => vec![],
            },
            Canon::B(a, b) => match (setup.psi_cell(a), setup.psi_cell(b)) {
                (Some(u), Some(v)) if u != v => vec![Canon::B(pair(u, v).0, pair(u, v).1)],
                _ => vec![],
            },
            Canon::KA(k, a) => setup.psi_cell(a).map(|u| Canon::KA(k, u)).into_iter().collect(),
        };
        let (deg, v) = src.canon_chain(c);
        let got = tgt.decompose(deg, &map[deg].apply(&v)).map(sorted);
        r.compare(format!("ψ{}", show_canon(src, c)), show(tgt, Some(&expected)), show(tgt, got.as_deref()));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// phi-with-gamma

fn phi_with_gamma(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let masks = so_masks(p.n);
    let prod = Product { masks: masks.clone(), ny: p.degrees.len() };
    let sq = ExtendedSquare::new(p.n - 1, prod.coefficients(&gen_labels(p.degrees.len()), &p.degrees))?;
    for &alpha in &masks {
        let a = ops::degree_of_mask(alpha);
        if a.is_multiple_of(2) {
            let mut squares = BTreeSet::new();
            for (s1, s2) in diagonal_oracle(alpha) {
                if s1 == s2 {
                    toggle(&mut squares, s1);
                }
            }
            let fmt = |s: &BTreeSet<u32>| {
                if s.is_empty() {
                    "0".to_string()
                } else {
                    join(s.iter().map(|m| cell_label(*m)), " + ")
                }
            };
            r.compare(
                format!("Sq^{}_* {} = Σ_{{α'=α''}} α'", a / 2, cell_label(alpha)),
                fmt(&sq_pascal(a / 2, alpha)),
                fmt(&squares),
            );
        }
        for y in 0..prod.ny {
            for rr in 0..=sq.m {
                let input = format!("ξφ({}⊗[e^{rr}⊗g{y}⊗g{y}])", cell_label(alpha));
                let (deg, v) = phi_chain(&sq, &prod, alpha, rr, y);
                if !sq.complex.is_cycle(deg, &v) {
                    r.record(input, "cycle", "not a cycle", false);
                    continue;
                }
                let mut expected = BTreeSet::new();
                if rr == sq.m {
                    for (s1, s2) in diagonal_oracle(alpha) {
                        toggle(&mut expected, (prod.idx(s1, y), prod.idx(s2, y)));
                    }
                }
                r.compare(input, show_pairs(&sq, &expected), show_pairs(&sq, &sq.xi(deg, &v)));
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// calculfinal-composite

fn calculfinal(mut r: VerificationReport, p: &OracleParams) -> Result<VerificationReport> {
    let n = p.n;
    let setup = ModuleSetup::new(n, p.base)?;
    let map = setup.psi_map();
    let model = formal_model(n, p.base);
    let x = formal_x(p.base);
    let sq_z = &setup.sq_z;
    let cell_poly = |idx: usize| Polynomial::generator(ops::formal_generator(setup.z.masks[idx], p.base));
    for i in 0..n {
        for j in 0..n {
            let out_deg = (i + j + 2 * p.base) as usize;
            let mut total = BitVec::zeros(sq_z.cells(out_deg).len());
            let mut ok = true;
            // (D_* ⊗ 1), then (1 ⊗ ā₁) on the chain level
            for (ma, ml) in diagonal_oracle(sphere_mask(i)) {
                let (deg, v) = sq_z.canon_chain(Canon::KA(j, 0));
                let (deg2, w) = act(sq_z, p.lemma, ml, deg, &v);
                let Some(classes) = sq_z.decompose(deg2, &w) else {
                    ok = false;
                    continue;
                };
                for c in classes {
                    // ψ φ on d_m ⊗ [e^r ⊗ z ⊗ z]
                    let Canon::KA(rr, z) = c else {
                        ok = false;
                        continue;
                    };
                    let (d3, ph) = phi_chain(&setup.sq_xz, &setup.xz, ma, rr, z);
                    debug_assert_eq!(d3, out_deg);
                    total.xor_assign(&map[d3].apply(&ph));
                }
            }
            let input = format!("Δ_{i} Q_{j} x");
            let expected = ops::delta_on_q(i, j, &x, &model)?;
            let classes = sq_z.decompose(out_deg, &total).filter(|_| ok);
            let Some(classes) = classes else {
                r.record(input, expected, "not a canonical combination", false);
                continue;
            };
            let mut actual = Polynomial::zero();
            for c in &classes {
                actual += match *c {
                    Canon::P(a, b) => ops::product(&cell_poly(a), &cell_poly(b)),
                    Canon::B(a, b) => ops::bracket(&cell_poly(a), &cell_poly(b), &model)?,
                    Canon::KA(k, a) => ops::q_lower(k, &cell_poly(a), &model)?,
                };
            }
            let input = format!("{input} = θ̄({})", show(sq_z, Some(&classes)));
            r.compare(input, expected, actual);
        }
    }
    Ok(r)
}
