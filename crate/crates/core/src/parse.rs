//! Parsers for the textual mini-languages used by the command-line front
//! end: representation specs (`sym_3(sym^3(E))`), basis-vector expressions
//! (`X^2Y`, `F_sym(3,1,1)`, `X^3∧Y^3`, `(X^2⊗Y^2)_sym`), and group elements
//! (`a,b;c,d`, `M(γ)`, `J`).
//!
//! Every rep spec printed by [`Rep::spec_string`] re-parses to an equal
//! rep.  ASCII alternatives are accepted for the Unicode operators: `&` for
//! `∧`, `%` for `⊗`, `*` for `·`.  Errors carry a character position.

use crate::error::{Error, Result};
use crate::field::{parse_element, Field, FieldElement};
use crate::repmod::action::wedge_sort;
use crate::repmod::{BasisLabel, GroupElement, Rep, RepKind, Vector};
use crate::shapes::{parse_partition, parse_tableau};

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { pos, msg: msg.into() }
}

// ---------------------------------------------------------------------------
// Rep specs
// ---------------------------------------------------------------------------

struct RepParser<'a> {
    field: &'a Field,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> RepParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(perr(self.pos, format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| perr(start, "expected a number"))
    }

    /// The text between the next `[` and its matching `]`.
    fn bracketed(&mut self) -> Result<String> {
        self.expect('[')?;
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos] != ']' {
            self.pos += 1;
        }
        if self.peek() != Some(']') {
            return Err(perr(start, "unterminated `[`"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        self.pos += 1;
        Ok(s)
    }

    fn child(&mut self) -> Result<Rep> {
        self.expect('(')?;
        let r = self.rep()?;
        self.expect(')')?;
        Ok(r)
    }

    fn rep(&mut self) -> Result<Rep> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident();
        match name.as_str() {
            "E" => Ok(Rep::natural(self.field)),
            "dual" => Ok(Rep::dual(self.child()?)),
            "cdual" => Ok(Rep::contra_dual(self.child()?)),
            "tensor" => {
                self.expect('(')?;
                let a = self.rep()?;
                self.expect(',')?;
                let b = self.rep()?;
                self.expect(')')?;
                Rep::tensor(a, b)
            }
            "sym" => {
                self.skip_ws();
                let upper = match self.peek() {
                    Some('^') => true,
                    Some('_') => false,
                    _ => return Err(perr(self.pos, "expected `^` or `_` after `sym`")),
                };
                self.pos += 1;
                let r = self.number()?;
                if r < 0 {
                    return Err(perr(at, "symmetric-power exponent must be ≥ 0"));
                }
                let inner = self.child()?;
                Ok(if upper {
                    Rep::sym_upper(r as usize, inner)
                } else {
                    Rep::sym_lower(r as usize, inner)
                })
            }
            "wedge" => {
                self.expect('^')?;
                let r = self.number()?;
                if r < 0 {
                    return Err(perr(at, "exterior-power exponent must be ≥ 0"));
                }
                Ok(Rep::wedge(r as usize, self.child()?))
            }
            "nabla" | "delta" => {
                let shape = parse_partition(&self.bracketed()?)?;
                let inner = self.child()?;
                Ok(if name == "nabla" {
                    Rep::nabla(shape, inner)
                } else {
                    Rep::delta(shape, inner)
                })
            }
            "det" => {
                self.expect('^')?;
                Ok(Rep::det_power(self.field, self.number()?))
            }
            "" => Err(perr(at, "expected a rep constructor")),
            other => Err(perr(at, format!("unknown rep constructor `{other}`"))),
        }
    }
}

/// Parse a rep spec such as `nabla[3,1,1,1,1](sym^12(E))` over `field`.
pub fn parse_rep(field: &Field, s: &str) -> Result<Rep> {
    let mut p = RepParser { field, chars: s.chars().collect(), pos: 0 };
    let rep = p.rep()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(perr(p.pos, "trailing input after rep spec"));
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Basis-vector expressions
// ---------------------------------------------------------------------------

/// Split `s` at top-level occurrences (paren/bracket depth 0) of any char in
/// `seps`, returning the pieces with their start positions.
fn split_top_level(s: &[char], seps: &[char]) -> Vec<(usize, String)> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, &c) in s.iter().enumerate() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if depth == 0 && seps.contains(&c) => {
                out.push((start, s[start..i].iter().collect()));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, s[start..].iter().collect()));
    out
}

/// Strip one layer of matching outer parentheses, if present.
fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if !(t.starts_with('(') && t.ends_with(')')) {
        return t;
    }
    let chars: Vec<char> = t.chars().collect();
    let mut depth = 0i32;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != chars.len() - 1 {
                    return t; // outer parens do not match each other
                }
            }
            _ => {}
        }
    }
    t[1..t.len() - 1].trim()
}

/// Parse a monomial `X^aY^b` (also `X`, `Y^3`, `1`) into (a, b).
fn parse_monomial(s: &str) -> Result<(usize, usize)> {
    let t = s.trim();
    if t == "1" {
        return Ok((0, 0));
    }
    let chars: Vec<char> = t.chars().collect();
    let mut pos = 0usize;
    let mut counts = [0usize; 2];
    let mut seen = [false; 2];
    while pos < chars.len() {
        let which = match chars[pos] {
            'X' => 0,
            'Y' => 1,
            c => return Err(perr(pos, format!("expected `X` or `Y`, found `{c}`"))),
        };
        if seen[which] || (which == 0 && seen[1]) {
            return Err(perr(pos, "monomial must be of the form X^aY^b"));
        }
        seen[which] = true;
        pos += 1;
        let mut count = 1usize;
        if chars.get(pos) == Some(&'^') {
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[start..pos].iter().collect();
            count = digits.parse().map_err(|_| perr(start, "expected an exponent"))?;
        }
        counts[which] = count;
    }
    Ok((counts[0], counts[1]))
}

/// Parse `s` as a basis label of `rep`, returning its index.
fn label_index(rep: &Rep, s: &str) -> Result<usize> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix('#') {
        let idx: usize =
            rest.trim().parse().map_err(|_| perr(1, "expected a basis index after `#`"))?;
        if idx >= rep.dimension() {
            return Err(perr(1, format!("basis index {idx} out of range (dim {})", rep.dimension())));
        }
        return Ok(idx);
    }
    let label = parse_label(rep, t)?;
    rep.basis_index(&label)
        .ok_or_else(|| perr(0, format!("`{t}` is not a canonical basis vector of {rep}")))
}

fn natural_index(s: &str) -> Result<usize> {
    match s.trim() {
        "X" => Ok(0),
        "Y" => Ok(1),
        other => Err(perr(0, format!("expected `X` or `Y`, found `{other}`"))),
    }
}

fn parse_label(rep: &Rep, s: &str) -> Result<BasisLabel> {
    let t = s.trim();
    match rep.kind() {
        RepKind::NaturalE => Ok(BasisLabel::E(natural_index(t)? as u8)),
        RepKind::SymUpper(r, inner) | RepKind::SymLower(r, inner)
            if matches!(inner.kind(), RepKind::NaturalE) =>
        {
            let body = strip_parens(strip_suffix_sym(t));
            let (a, b) = if body.contains(['⊗', '%']) {
                // Tensor-style spelling (X⊗Y)_sym of a symmetrized product.
                let chars: Vec<char> = body.chars().collect();
                let mut counts = (0usize, 0usize);
                for (_, part) in split_top_level(&chars, &['⊗', '%']) {
                    match natural_index(&part)? {
                        0 => counts.0 += 1,
                        _ => counts.1 += 1,
                    }
                }
                counts
            } else {
                parse_monomial(body)?
            };
            if a + b != *r {
                return Err(perr(0, format!("monomial degree {} ≠ {r}", a + b)));
            }
            let mut is = vec![0usize; a];
            is.extend(std::iter::repeat(1).take(b));
            Ok(BasisLabel::Multi(is))
        }
        RepKind::SymLower(r, inner) | RepKind::SymUpper(r, inner) => {
            // F_sym(x₁,…) with X-exponent arguments, for Sym of Sym^ℓ E.
            if let Some(args) = t.strip_prefix("F_sym") {
                let RepKind::SymUpper(ell, e) = inner.kind() else {
                    return Err(perr(0, "F_sym(...) needs an inner upper symmetric power of E"));
                };
                if !matches!(e.kind(), RepKind::NaturalE) {
                    return Err(perr(0, "F_sym(...) needs an inner upper symmetric power of E"));
                }
                let mut is = vec![];
                for (pos, part) in
                    split_top_level(&strip_parens(args).chars().collect::<Vec<_>>(), &[','])
                {
                    let x: usize = part
                        .trim()
                        .parse()
                        .map_err(|_| perr(pos, "expected an X-exponent"))?;
                    if x > *ell {
                        return Err(perr(pos, format!("X-exponent {x} exceeds {ell}")));
                    }
                    is.push(ell - x); // basis index = Y-exponent
                }
                if is.len() != *r {
                    return Err(perr(0, format!("expected {r} arguments, got {}", is.len())));
                }
                is.sort_unstable();
                return Ok(BasisLabel::Multi(is));
            }
            // (f₁⊗f₂⊗…)_sym (Sym_r) or f₁·f₂·… (Sym^r), factors in the
            // inner rep.
            let body = strip_parens(strip_suffix_sym(t));
            let chars: Vec<char> = body.chars().collect();
            let seps: &[char] = if matches!(rep.kind(), RepKind::SymLower(..)) {
                &['⊗', '%']
            } else {
                &['·', '*']
            };
            let mut is = vec![];
            for (_, part) in split_top_level(&chars, seps) {
                is.push(label_index(inner, &part)?);
            }
            if is.len() != *r {
                return Err(perr(0, format!("expected {r} factors, got {}", is.len())));
            }
            is.sort_unstable();
            Ok(BasisLabel::Multi(is))
        }
        RepKind::Wedge(r, inner) => {
            let chars: Vec<char> = t.chars().collect();
            let mut is = vec![];
            for (_, part) in split_top_level(&chars, &['∧', '&']) {
                is.push(label_index(inner, &part)?);
            }
            if is.len() != *r {
                return Err(perr(0, format!("expected {r} wedge factors, got {}", is.len())));
            }
            match wedge_sort(is) {
                Some((sorted, 1)) => Ok(BasisLabel::Sub(sorted)),
                Some((_, _)) => Err(perr(0, "wedge factors must be listed in increasing order")),
                None => Err(perr(0, "repeated wedge factor")),
            }
        }
        RepKind::Tensor(a, b) => {
            let chars: Vec<char> = t.chars().collect();
            let parts = split_top_level(&chars, &['⊗', '%']);
            if parts.len() < 2 {
                return Err(perr(0, "expected `left⊗right` for a tensor product"));
            }
            // Left factor, then the rest re-joined for the (right-nested)
            // remainder.
            let left = label_index(a, &parts[0].1)?;
            let rest: Vec<String> = parts[1..].iter().map(|(_, s)| s.clone()).collect();
            let right = label_index(b, &rest.join("⊗"))?;
            Ok(BasisLabel::Pair(left, right))
        }
        RepKind::Nabla(..) | RepKind::Delta(..) => {
            let body = if t.starts_with('[') && t.ends_with(']') {
                &t[1..t.len() - 1]
            } else {
                t
            };
            Ok(BasisLabel::Ssyt(parse_tableau(body)?))
        }
        RepKind::Dual(inner) | RepKind::ContraDual(inner) => {
            let body = t
                .strip_prefix("dual(")
                .or_else(|| t.strip_prefix("cdual("))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| perr(0, "expected `dual(...)` or `cdual(...)`"))?;
            Ok(BasisLabel::DualOf(label_index(inner, body)?))
        }
        RepKind::DetPower(_) => {
            if t == "det" || t == "1" {
                Ok(BasisLabel::Unit)
            } else {
                Err(perr(0, "expected `det`"))
            }
        }
    }
}

fn strip_suffix_sym(s: &str) -> &str {
    s.trim().strip_suffix("_sym").unwrap_or(s.trim())
}

/// Parse a basis-vector expression for `rep`: a single canonical basis
/// label (`X^2Y`, `F_sym(3,1,1)`, `X^3∧Y^3`, `(X⊗Y)_sym`, `[1 1 / 2]`,
/// `#k`), producing the corresponding basis vector.
pub fn parse_vector(rep: &Rep, s: &str) -> Result<Vector<FieldElement>> {
    Ok(Vector::basis_vector(rep, label_index(rep, s)?))
}

// ---------------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------------

/// Parse a 2×2 group element: `J`, `M(γ)`, or explicit entries `a,b;c,d`
/// with field-element literals.
pub fn parse_group(field: &Field, s: &str) -> Result<GroupElement<FieldElement>> {
    let t = s.trim();
    if t == "J" {
        return Ok(GroupElement::j(field));
    }
    if let Some(g) = t.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        return Ok(GroupElement::m_gamma(field, parse_element(field, g.trim())?));
    }
    let rows: Vec<&str> = t.split(';').collect();
    if rows.len() != 2 {
        return Err(perr(0, "expected `J`, `M(γ)`, or `a,b;c,d`"));
    }
    let mut entries = vec![];
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(perr(0, "each row needs exactly two entries"));
        }
        for c in cols {
            entries.push(parse_element(field, c.trim())?);
        }
    }
    let mut it = entries.into_iter();
    let (a, b, c, d) =
        (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    Ok(GroupElement::new(field, a, b, c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn f3() -> Field {
        Field::gf(3).unwrap()
    }

    #[test]
    fn rep_specs_round_trip() {
        let f = f3();
        let e = Rep::natural(&f);
        let reps = [
            e.clone(),
            Rep::sym_lower(3, Rep::sym_upper(3, e.clone())),
            Rep::wedge(2, Rep::sym_upper(4, e.clone())),
            Rep::nabla(Partition::new(vec![3, 1, 1]).unwrap(), Rep::sym_upper(6, e.clone())),
            Rep::delta(Partition::new(vec![2, 1]).unwrap(), Rep::sym_lower(2, e.clone())),
            Rep::dual(Rep::contra_dual(e.clone())),
            Rep::tensor(e.clone(), Rep::wedge(2, Rep::sym_upper(2, e.clone()))).unwrap(),
            Rep::det_power(&f, -2),
        ];
        for rep in reps {
            let parsed = parse_rep(&f, &rep.spec_string()).unwrap();
            assert_eq!(parsed, rep, "{}", rep.spec_string());
        }
    }

    #[test]
    fn rep_spec_with_exponent_shorthand() {
        let f = f3();
        let r = parse_rep(&f, "nabla[3,1^4](sym^12(E))").unwrap();
        let expected = Rep::nabla(
            Partition::new(vec![3, 1, 1, 1, 1]).unwrap(),
            Rep::sym_upper(12, Rep::natural(&f)),
        );
        assert_eq!(r, expected);
        assert_eq!(r.dimension(), 96525);
    }

    #[test]
    fn rep_spec_errors_carry_positions() {
        let f = f3();
        let Err(Error::ParseError { pos, .. }) = parse_rep(&f, "sym^2(Q)") else {
            panic!("expected a parse error");
        };
        assert_eq!(pos, 6);
        assert!(matches!(
            parse_rep(&f, "frob(E)"),
            Err(Error::ParseError { pos: 0, .. })
        ));
        assert!(parse_rep(&f, "sym^2(E) junk").is_err());
    }

    #[test]
    fn monomial_vectors() {
        let f = f3();
        let s3 = Rep::sym_upper(3, Rep::natural(&f));
        assert_eq!(parse_vector(&s3, "X^2Y").unwrap().terms().next().unwrap().0, 1);
        assert_eq!(parse_vector(&s3, "Y^3").unwrap().terms().next().unwrap().0, 3);
        assert!(parse_vector(&s3, "X^2").is_err());
        let low = Rep::sym_lower(2, Rep::natural(&f));
        assert_eq!(parse_vector(&low, "(X⊗Y)_sym").unwrap().terms().next().unwrap().0, 1);
    }

    #[test]
    fn f_sym_vector() {
        let f = Field::rationals();
        let dom = Rep::sym_lower(3, Rep::sym_upper(3, Rep::natural(&f)));
        let v = parse_vector(&dom, "F_sym(3,1,1)").unwrap();
        let (idx, _) = v.terms().next().unwrap();
        assert_eq!(dom.basis()[idx], BasisLabel::Multi(vec![0, 2, 2]));
    }

    #[test]
    fn wedge_and_tensor_vectors() {
        let f = f3();
        let w = Rep::wedge(2, Rep::sym_upper(3, Rep::natural(&f)));
        let v = parse_vector(&w, "X^3∧Y^3").unwrap();
        let (idx, _) = v.terms().next().unwrap();
        assert_eq!(w.basis()[idx], BasisLabel::Sub(vec![0, 3]));
        // ASCII alternative.
        assert_eq!(parse_vector(&w, "X^3&Y^3").unwrap(), v);
        let t = Rep::tensor(
            Rep::sym_upper(2, Rep::natural(&f)),
            Rep::sym_upper(2, Rep::natural(&f)),
        )
        .unwrap();
        let tv = parse_vector(&t, "X^2%Y^2").unwrap();
        let (idx, _) = tv.terms().next().unwrap();
        assert_eq!(t.basis()[idx], BasisLabel::Pair(0, 2));
    }

    #[test]
    fn sym_of_sym_upper_product() {
        let f = f3();
        let rep = Rep::sym_upper(2, Rep::sym_upper(2, Rep::natural(&f)));
        let v = parse_vector(&rep, "X^2·Y^2").unwrap();
        let (idx, _) = v.terms().next().unwrap();
        assert_eq!(rep.basis()[idx], BasisLabel::Multi(vec![0, 2]));
        assert_eq!(parse_vector(&rep, "X^2*Y^2").unwrap(), v);
    }

    #[test]
    fn tableau_vector() {
        let f = f3();
        let rep = Rep::nabla(
            Partition::new(vec![2, 1]).unwrap(),
            Rep::sym_upper(2, Rep::natural(&f)),
        );
        let v = parse_vector(&rep, "[1 1 / 2]").unwrap();
        let label = rep.label_string(v.terms().next().unwrap().0);
        assert_eq!(label, "[1 1 / 2]");
    }

    #[test]
    fn index_fallback() {
        let f = f3();
        let rep = Rep::sym_upper(4, Rep::natural(&f));
        let v = parse_vector(&rep, "#2").unwrap();
        assert_eq!(v.terms().next().unwrap().0, 2);
        assert!(parse_vector(&rep, "#9").is_err());
    }

    #[test]
    fn group_elements() {
        let f = f3();
        let j = parse_group(&f, "J").unwrap();
        assert_eq!(j.entry(0, 1), &f.one());
        let m = parse_group(&f, "M(2)").unwrap();
        assert_eq!(m.entry(1, 0), &f.from_int(2));
        let g = parse_group(&f, "1,0;2,1").unwrap();
        assert_eq!(g.entry(1, 0), &f.from_int(2));
        assert!(parse_group(&f, "1,0;2").is_err());
    }
}
