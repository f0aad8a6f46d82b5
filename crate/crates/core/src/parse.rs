//! Text format for polynomials, rings and ideals.
//!
//! ```text
//! ring Fp[x,y,z,w];
//! ideal (x*y, x*w, (x-y)*z, z^2, x^2+z*w);
//! ```
//!
//! Polynomials use identifiers for variables, integer literals, `+ - * ^`
//! and parentheses. A `/` by a nonzero constant is also accepted, which is
//! how rational coefficients print.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Ideal, RingDescriptor};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn lex(src: &str, base: usize) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((base + pos, Tok::Int(chars[start..i].iter().map(|c| c.1).collect())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                i += 1;
            }
            out.push((base + pos, Tok::Ident(chars[start..i].iter().map(|c| c.1).collect())));
        } else if "+-*^()/,;[]".contains(c) {
            out.push((base + pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: base + pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    ring: &'a RingDescriptor,
    order: MonomialOrder,
    _f: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                self.at += 1;
                let pos = self.pos();
                let d = self.unary()?;
                let c = match d.terms() {
                    [(m, c)] if m.is_one() => c.clone(),
                    _ => return Err(Error::Syntax { pos, msg: "division only by a nonzero constant".into() }),
                };
                match c.inv() {
                    Some(ci) => acc = acc.scale(&ci),
                    None => return Err(Error::Syntax { pos, msg: "division by zero".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(s)) => {
                    self.at += 1;
                    let e: u32 = s.parse().ok().filter(|e| *e < 1 << 15).map_or_else(|| self.err("exponent too large"), Ok)?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.at += 1;
                Ok(Polynomial::constant(F::from_decimal(&s).unwrap(), self.order))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.at += 1;
                    Ok(Polynomial::var(i, self.order))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parser<'a, F: Field>(toks: &'a [(usize, Tok)], end: usize, ring: &'a RingDescriptor, order: MonomialOrder) -> Parser<'a, F> {
    Parser { toks, at: 0, end, ring, order, _f: std::marker::PhantomData }
}

/// Parses one polynomial over `ring`.
pub fn parse_poly<F: Field>(src: &str, ring: &RingDescriptor, order: MonomialOrder) -> Result<Polynomial<F>> {
    let toks = lex(src, 0)?;
    let mut p = parser::<F>(&toks, src.len(), ring, order);
    let e = p.expr()?;
    if p.at != toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Field named in a `ring` header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// `Fp` (characteristic chosen elsewhere) or `F<p>`.
    Prime(Option<u64>),
    /// `QQ`.
    Rational,
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub struct IdealFile<F: Field> {
    pub field: FieldSpec,
    pub ring: Arc<RingDescriptor>,
    pub gens: Vec<Polynomial<F>>,
}

impl<F: Field> IdealFile<F> {
    pub fn ideal(&self) -> Result<Ideal<F>> {
        Ideal::new(self.ring.clone(), self.gens.clone())
    }
}

fn strip_comments(src: &str) -> String {
    src.lines()
        .map(|l| {
            let cut = [l.find('#'), l.find("//")].into_iter().flatten().min().unwrap_or(l.len());
            // keep offsets stable
            let mut s = l[..cut].to_string();
            s.extend(std::iter::repeat(' ').take(l.len() - cut));
            s
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Reads only the `ring ...;` header.
pub fn parse_header(src: &str) -> Result<(FieldSpec, RingDescriptor)> {
    let clean = strip_comments(src);
    let toks = lex(&clean, 0)?;
    let dummy = RingDescriptor::new(["_"])?;
    let mut p = parser::<crate::field::F32003>(&toks, clean.len(), &dummy, MonomialOrder::Grevlex);
    header(&mut p)
}

fn header<F: Field>(p: &mut Parser<'_, F>) -> Result<(FieldSpec, RingDescriptor)> {
    match p.peek() {
        Some(Tok::Ident(k)) if k == "ring" => p.at += 1,
        _ => return p.err("expected `ring`"),
    }
    let field = match p.peek().cloned() {
        Some(Tok::Ident(name)) => {
            p.at += 1;
            if name == "Fp" {
                FieldSpec::Prime(None)
            } else if name == "QQ" {
                FieldSpec::Rational
            } else if let Some(n) = name.strip_prefix('F').and_then(|d| d.parse::<u64>().ok()) {
                FieldSpec::Prime(Some(n))
            } else {
                return p.err(format!("unknown coefficient field `{name}`"));
            }
        }
        _ => return p.err("expected coefficient field"),
    };
    p.expect('[')?;
    let mut names = Vec::new();
    loop {
        match p.peek().cloned() {
            Some(Tok::Ident(n)) => {
                p.at += 1;
                names.push(n);
            }
            _ => return p.err("expected variable name"),
        }
        if p.eat(']') {
            break;
        }
        p.expect(',')?;
    }
    p.expect(';')?;
    Ok((field, RingDescriptor::new(names)?))
}

/// Parses a full `ring ...; ideal (...);` file.
pub fn parse_ideal_file<F: Field>(src: &str, order: MonomialOrder) -> Result<IdealFile<F>> {
    let clean = strip_comments(src);
    let toks = lex(&clean, 0)?;
    let dummy = RingDescriptor::new(["_"]).unwrap();
    let mut hp = parser::<F>(&toks, clean.len(), &dummy, order);
    let (field, ring) = header(&mut hp)?;
    let at = hp.at;
    let mut p = parser::<F>(&toks, clean.len(), &ring, order);
    p.at = at;
    match p.peek() {
        Some(Tok::Ident(k)) if k == "ideal" => p.at += 1,
        _ => return p.err("expected `ideal`"),
    }
    p.expect('(')?;
    let mut gens = Vec::new();
    if !p.eat(')') {
        loop {
            gens.push(p.expr()?);
            if p.eat(')') {
                break;
            }
            p.expect(',')?;
        }
    }
    p.eat(';');
    if p.at != toks.len() {
        return p.err("trailing input");
    }
    Ok(IdealFile { field, ring: Arc::new(ring), gens })
}

fn format_monomial(m: &Monomial, ring: &RingDescriptor) -> String {
    let mut parts = Vec::new();
    for (i, name) in ring.names().iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Prints in the input grammar; `parse_poly(format_poly(f)) == f`.
pub fn format_poly<F: Field>(f: &Polynomial<F>, ring: &RingDescriptor) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (neg, mag) = c.sign_split();
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        let mono = format_monomial(m, ring);
        if mono.is_empty() {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{mag}*{mono}"));
        }
    }
    s
}

/// Prints an ideal file that [`parse_ideal_file`] reads back.
pub fn format_ideal_file<F: Field>(field: &str, ideal: &Ideal<F>) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| format_poly(g, ideal.ring())).collect();
    format!("ring {}[{}];\nideal ({});\n", field, ideal.ring().names().join(","), gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rat, F32003};
    use num_traits::One;
    use proptest::prelude::*;

    fn ring() -> RingDescriptor {
        RingDescriptor::new(["x", "y", "z", "w"]).unwrap()
    }

    fn p(s: &str) -> Polynomial<F32003> {
        parse_poly(s, &ring(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn commutativity_cancels() {
        assert!(p("x*y - y*x").is_zero());
    }

    #[test]
    fn examples_from_the_four_variable_ideal() {
        assert_eq!(p("(x-y)*z"), &p("x*z") - &p("y*z"));
        assert_eq!(format_poly(&p("x^2+z*w"), &ring()), "x^2+z*w");
        assert_eq!(format_poly(&p("-3*y^2 + 2 - x"), &ring()), "-3*y^2-x+2");
    }

    #[test]
    fn errors_report_position() {
        let r = parse_poly::<F32003>("x + * y", &ring(), MonomialOrder::Grevlex);
        assert!(matches!(r, Err(Error::Syntax { pos: 4, .. })));
        let r = parse_poly::<F32003>("x + q", &ring(), MonomialOrder::Grevlex);
        assert_eq!(r, Err(Error::UnknownVariable("q".into())));
        assert!(parse_poly::<F32003>("x / y", &ring(), MonomialOrder::Grevlex).is_err());
        assert!(parse_poly::<F32003>("(x", &ring(), MonomialOrder::Grevlex).is_err());
    }

    #[test]
    fn rational_round_trip() {
        let f: Polynomial<Rat> = parse_poly("3/4*x - y/2 + 1/3*z^2", &ring(), MonomialOrder::Grevlex).unwrap();
        assert_eq!(f.coeff(&Monomial::var(0)), Rat::new(3, 4));
        let back: Polynomial<Rat> = parse_poly(&format_poly(&f, &ring()), &ring(), MonomialOrder::Grevlex).unwrap();
        assert_eq!(back, f);
        let g: Polynomial<Rat> = parse_poly("2/2", &ring(), MonomialOrder::Grevlex).unwrap();
        assert!(g.leading_coeff().unwrap().is_one());
    }

    #[test]
    fn ideal_file() {
        let src = "# example\nring Fp[x,y,z,w];\nideal (x*y, x*w, (x-y)*z, z^2, x^2+z*w);\n";
        let f: IdealFile<F32003> = parse_ideal_file(src, MonomialOrder::Grevlex).unwrap();
        assert_eq!(f.field, FieldSpec::Prime(None));
        assert_eq!(f.gens.len(), 5);
        let (field, r) = parse_header("ring F101[a,b];").unwrap();
        assert_eq!(field, FieldSpec::Prime(Some(101)));
        assert_eq!(r.nvars(), 2);
        let again: IdealFile<F32003> = parse_ideal_file(&format_ideal_file("Fp", &f.ideal().unwrap()), MonomialOrder::Grevlex).unwrap();
        assert_eq!(again.gens, f.gens);
        assert!(parse_ideal_file::<F32003>("ring Fp[x,x];", MonomialOrder::Grevlex).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<F32003>> {
        proptest::collection::vec((proptest::collection::vec(0u16..4, 4), -40000i64..40000), 0..7).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), F32003::from_i64(c))).collect(),
                MonomialOrder::Grevlex,
            )
        })
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(f in arb_poly()) {
            let s = format_poly(&f, &ring());
            prop_assert_eq!(p(&s), f);
        }
    }
}
