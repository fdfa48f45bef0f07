use alloc::vec::Vec;
use core::fmt;

/// Symbol family of a generator. The derived order is the canonical
/// rendering order of factors inside a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `u_n`, polynomial generators of `H_*Ω²S^{k+2}`.
    U,
    /// `d_i`, exterior generators of `H_*SO(n)`.
    D,
    /// `Q^{i_1}…Q^{i_r}[1] * [-2^r]`, a Q-word on `[1]` moved to component 0.
    QWord,
    /// `θ_d * [-1]`, a Θ-image class moved to component 0.
    Theta,
    /// A formal spherical primitive `s_t`, optionally with upper Q-indices
    /// applied: indices `[t, i_1, …, i_r]` mean `Q^{i_1}…Q^{i_r} s_t`.
    Spherical,
    /// `Δ_S x` in a formal model; the index is the bitmask of `S`.
    Formal,
    /// `Q_k(Δ_S x)` in a formal model; indices `[k, mask]`.
    FormalQ,
    /// `{Δ_S x, Δ_T x}` in a formal model; indices `[mask_S, mask_T]` with
    /// `mask_S < mask_T`.
    FormalBracket,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::U => "u",
            Family::D => "d",
            Family::QWord => "q",
            Family::Theta => "t",
            Family::Spherical => "s",
            Family::Formal => "x",
            Family::FormalQ => "qx",
            Family::FormalBracket => "bx",
        }
    }

    pub fn from_prefix(p: &str) -> Option<Family> {
        Some(match p {
            "u" => Family::U,
            "d" => Family::D,
            "q" => Family::QWord,
            "t" => Family::Theta,
            "s" => Family::Spherical,
            "x" => Family::Formal,
            "qx" => Family::FormalQ,
            "bx" => Family::FormalBracket,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: Family,
    indices: Vec<u32>,
    degree: u32,
}

impl Generator {
    pub fn new(family: Family, indices: Vec<u32>, degree: u32) -> Self {
        Generator { family, indices, degree }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// First index, or 0 for an index-free generator.
    pub fn index(&self) -> u32 {
        self.indices.first().copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Exactly the `d`-family generators are exterior.
    pub fn is_exterior(&self) -> bool {
        self.family == Family::D
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.prefix())?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str("_")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}
