//! Expression trees over the operation symbols, their evaluation in a model,
//! and their rendering in the command-line grammar.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Polynomial;
use crate::model::AlgebraModel;
use crate::{ops, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A named generator raised to a power.
    Gen(String, u32),
    Component(i64),
    Sum(Vec<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    /// Lower-indexed `Q_i`.
    Q(u32, Box<Expr>),
    /// Upper-indexed `Q^i`.
    QUpper(u32, Box<Expr>),
    Delta(u32, Box<Expr>),
    DeltaPrimitive(u32, Box<Expr>),
}

impl Expr {
    pub fn gen(name: &str) -> Expr {
        Expr::Gen(name.to_string(), 1)
    }

    pub fn product(a: Expr, b: Expr) -> Expr {
        Expr::Product(Box::new(a), Box::new(b))
    }

    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn q(i: u32, a: Expr) -> Expr {
        Expr::Q(i, Box::new(a))
    }

    pub fn q_upper(i: u32, a: Expr) -> Expr {
        Expr::QUpper(i, Box::new(a))
    }

    pub fn delta(i: u32, a: Expr) -> Expr {
        Expr::Delta(i, Box::new(a))
    }

    pub fn delta_primitive(i: u32, a: Expr) -> Expr {
        Expr::DeltaPrimitive(i, Box::new(a))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Gen(..) | Expr::Component(_) => 1,
            Expr::Sum(v) => 1 + v.iter().map(Expr::depth).max().unwrap_or(0),
            Expr::Product(a, b) | Expr::Bracket(a, b) => 1 + a.depth().max(b.depth()),
            Expr::Q(_, a) | Expr::QUpper(_, a) | Expr::Delta(_, a) | Expr::DeltaPrimitive(_, a) => 1 + a.depth(),
        }
    }

    pub fn eval(&self, m: &AlgebraModel) -> Result<Polynomial> {
        Ok(match self {
            Expr::Gen(name, e) => Polynomial::generator(m.lookup(name)?.clone()).pow(*e),
            Expr::Component(c) => {
                if *c != 0 && !m.has_components() {
                    return Err(Error::UnknownGenerator(alloc::format!("[{c}]")));
                }
                Polynomial::component_class(*c)
            }
            Expr::Sum(v) => {
                let mut out = Polynomial::zero();
                for t in v {
                    out += t.eval(m)?;
                }
                out
            }
            Expr::Product(a, b) => &a.eval(m)? * &b.eval(m)?,
            Expr::Bracket(a, b) => ops::bracket(&a.eval(m)?, &b.eval(m)?, m)?,
            Expr::Q(i, a) => ops::q_lower(*i, &a.eval(m)?, m)?,
            Expr::QUpper(i, a) => ops::q_upper(*i, &a.eval(m)?, m)?,
            Expr::Delta(i, a) => ops::delta(*i, &a.eval(m)?, m)?,
            Expr::DeltaPrimitive(i, a) => ops::primitive_delta(*i, &a.eval(m)?, m)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(name, 1) => f.write_str(name),
            Expr::Gen(name, e) => write!(f, "{name}^{e}"),
            Expr::Component(c) => write!(f, "[{c}]"),
            Expr::Sum(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str("+")?;
                    }
                    if matches!(t, Expr::Sum(_)) {
                        write!(f, "({t})")?;
                    } else {
                        write!(f, "{t}")?;
                    }
                }
                Ok(())
            }
            Expr::Product(a, b) => {
                if matches!(**a, Expr::Sum(_)) {
                    write!(f, "({a})*")?;
                } else {
                    write!(f, "{a}*")?;
                }
                if matches!(**b, Expr::Sum(_) | Expr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Expr::Bracket(a, b) => write!(f, "B({a},{b})"),
            Expr::Q(i, a) => write!(f, "Q{i}({a})"),
            Expr::QUpper(i, a) => write!(f, "QU{i}({a})"),
            Expr::Delta(i, a) => write!(f, "D{i}({a})"),
            Expr::DeltaPrimitive(i, a) => write!(f, "DP{i}({a})"),
        }
    }
}
