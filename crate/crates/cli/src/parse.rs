//! Parser for the expression grammar
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := gen | '[' int ']' | 'Q' int '(' expr ')' | 'QU' int '(' expr ')'
//!         | 'D' int '(' expr ')' | 'DP' int '(' expr ')' | 'B(' expr ',' expr ')'
//!         | '(' expr ')'
//! gen    := name digits ('_' digits)* ('^' digits)?
//! ```
//!
//! Whitespace is ignored. Error offsets are 1-based character columns; an
//! error at the end of the input points one past the last character.

use std::fmt;

use fd_core::Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for SyntaxError {}

type PResult<T> = Result<T, SyntaxError>;

pub fn parse(text: &str) -> PResult<Expr> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError { offset: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => Err(self.error(format!("expected `{c}`, found `{got}`"))),
                None => Err(self.error(format!("expected `{c}`, found end of input"))),
            }
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::product(acc, self.factor()?);
        }
        Ok(acc)
    }

    /// Digits directly at the cursor (no whitespace skipping inside tokens).
    fn digits(&mut self) -> PResult<u32> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| SyntaxError { offset: start + 1, message: format!("index `{s}` too large") })
    }

    fn keyword(&mut self, kw: &str) -> bool {
        let end = self.pos + kw.chars().count();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(kw.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn operator(&mut self) -> PResult<Expr> {
        type Ctor = fn(u32, Expr) -> Expr;
        let table: [(&str, Ctor); 4] =
            [("QU", Expr::q_upper), ("DP", Expr::delta_primitive), ("Q", Expr::q), ("D", Expr::delta)];
        for (kw, ctor) in table {
            if self.keyword(kw) {
                let i = self.digits()?;
                self.expect('(')?;
                let arg = self.expr()?;
                self.expect(')')?;
                return Ok(ctor(i, arg));
            }
        }
        Err(self.error("unknown operator"))
    }

    fn factor(&mut self) -> PResult<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                self.skip_ws();
                let negative = matches!(self.chars.get(self.pos), Some('-' | '−'));
                if negative {
                    self.pos += 1;
                }
                self.skip_ws();
                let c = i64::from(self.digits()?);
                self.expect(']')?;
                Ok(Expr::Component(if negative { -c } else { c }))
            }
            Some('B') => {
                self.pos += 1;
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::bracket(a, b))
            }
            Some('Q' | 'D') => self.operator(),
            Some(c) if c.is_ascii_lowercase() => self.generator(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn generator(&mut self) -> PResult<Expr> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_lowercase) {
            self.pos += 1;
        }
        self.digits()?;
        while self.chars.get(self.pos) == Some(&'_') {
            self.pos += 1;
            self.digits()?;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let exp = if self.eat('^') {
            self.skip_ws();
            self.digits()?
        } else {
            1
        };
        Ok(Expr::Gen(name, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_instances() {
        assert_eq!(parse("D1(Q1(u1))").unwrap(), Expr::delta(1, Expr::q(1, Expr::gen("u1"))));
        assert_eq!(
            parse("B(u1,u1)+u1^2").unwrap(),
            Expr::Sum(vec![Expr::bracket(Expr::gen("u1"), Expr::gen("u1")), Expr::Gen("u1".into(), 2)])
        );
        assert_eq!(parse(" [ -3 ] * qx1_0 ").unwrap(), Expr::product(Expr::Component(-3), Expr::gen("qx1_0")));
        assert_eq!(parse("[−1]").unwrap(), Expr::Component(-1));
        assert_eq!(parse("QU2(DP3(t3))").unwrap(), Expr::q_upper(2, Expr::delta_primitive(3, Expr::gen("t3"))));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("D1(Q1(u1").unwrap_err().offset, 9);
        assert_eq!(parse("u1 +").unwrap_err().offset, 5);
        assert_eq!(parse("u").unwrap_err().offset, 2);
        assert_eq!(parse("X1").unwrap_err().offset, 1);
        assert_eq!(parse("u1)").unwrap_err().offset, 3);
    }
}
