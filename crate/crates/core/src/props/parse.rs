//! Parser for property expressions.

use std::collections::BTreeMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_rational::Rational64;

use super::{Atom, Comparison, Expr, Multiplicativity, NamedCode, PropertyError, PropertyOptions, ZeroPolicy};
use super::{WeightFunction, WeightKind};
use crate::lexspace::Ambient;
use crate::ring::{FiniteRing, IdealLattice, RingFamily};

pub(super) struct Parsed {
    pub expr: Expr,
    pub zero_policy: ZeroPolicy,
    pub multiplicative: Multiplicativity,
}

pub(super) fn parse(
    ambient: &Ambient,
    lattice: &IdealLattice,
    text: &str,
    codes: &BTreeMap<String, NamedCode>,
    options: PropertyOptions,
) -> Result<Parsed, PropertyError> {
    let mut p = Parser {
        text,
        pos: 0,
        ambient,
        lattice,
        codes,
        options,
        weights: BTreeMap::new(),
    };
    let (expr, policy, mult) = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(Parsed {
        expr,
        zero_policy: policy,
        multiplicative: mult,
    })
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    ambient: &'a Ambient,
    lattice: &'a IdealLattice,
    codes: &'a BTreeMap<String, NamedCode>,
    options: PropertyOptions,
    weights: BTreeMap<&'static str, Arc<WeightFunction>>,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PropertyError {
        PropertyError::Syntax {
            text: self.text.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), PropertyError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    /// An expression with an optional `zero:` suffix.
    fn expr(&mut self) -> Result<(Expr, ZeroPolicy, Multiplicativity), PropertyError> {
        let (expr, mult) = self.primary()?;
        let policy = if self.eat("zero:") {
            if self.eat("true") {
                ZeroPolicy::ForceTrue
            } else if self.eat("false") {
                ZeroPolicy::ForceFalse
            } else if self.eat("asis") {
                ZeroPolicy::AsIs
            } else {
                return Err(self.error("expected `true`, `false` or `asis`"));
            }
        } else {
            ZeroPolicy::AsIs
        };
        Ok((expr, policy, mult))
    }

    /// A nested expression; its zero policy is folded into the tree.
    fn inner(&mut self) -> Result<(Expr, Multiplicativity), PropertyError> {
        let (expr, policy, mult) = self.expr()?;
        let expr = match policy {
            ZeroPolicy::AsIs => expr,
            ZeroPolicy::ForceTrue => Expr::Or(Box::new(expr), Box::new(Expr::Atom(Atom::Equals { key: 0 }))),
            ZeroPolicy::ForceFalse => Expr::And(Box::new(expr), Box::new(Expr::Atom(Atom::NonZero))),
        };
        Ok((expr, mult))
    }

    fn primary(&mut self) -> Result<(Expr, Multiplicativity), PropertyError> {
        if self.eat("(") {
            let e = self.inner()?;
            self.expect(")")?;
            return Ok(e);
        }
        for (name, is_and) in [("and(", true), ("or(", false)] {
            if self.eat(name) {
                let (a, ma) = self.inner()?;
                self.expect(",")?;
                let (b, mb) = self.inner()?;
                self.expect(")")?;
                let e = if is_and {
                    Expr::And(Box::new(a), Box::new(b))
                } else {
                    Expr::Or(Box::new(a), Box::new(b))
                };
                return Ok((e, ma.both(mb)));
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<(Expr, Multiplicativity), PropertyError> {
        self.skip_ws();
        let ring = self.ambient.ring();
        if self.eat("selfdot==0") {
            if !ring.is_commutative() && !self.options.allow_noncommutative_selfdot {
                return Err(PropertyError::SelfDotNoncommutative(ring.spec().to_string()));
            }
            let mult = if ring.is_commutative() {
                Multiplicativity::Declared
            } else {
                Multiplicativity::Unknown
            };
            return Ok((Expr::Atom(Atom::SelfDot), mult));
        }
        if self.eat("sumin:") {
            let token = self.token()?;
            let g = ring.parse_elem(token)?;
            let members = &self.lattice.ideals()[self.lattice.ideal_of(g)].members;
            let mut ideal = FixedBitSet::with_capacity(ring.size());
            ideal.extend(members.iter().copied());
            return Ok((Expr::Atom(Atom::SumIn { ideal }), Multiplicativity::Declared));
        }
        if self.eat("member:") {
            let mut sets = Vec::new();
            loop {
                let name = self.code_name()?;
                let code = &self.codes[name];
                let mut set = FixedBitSet::with_capacity(self.ambient.total());
                set.extend(code.members.iter().copied());
                sets.push(set);
                // a comma continues the list only if a registered name follows
                let save = self.pos;
                if self.eat(",") && self.peek_code_name().is_some() {
                    continue;
                }
                self.pos = save;
                break;
            }
            // codes are submodules, so closed under unit scaling
            return Ok((Expr::Atom(Atom::Member { codes: sets }), Multiplicativity::Declared));
        }
        if self.eat("eq:") {
            let token = self.token()?;
            let v = self.ambient.parse_vector(token)?;
            let key = self.ambient.key(&v);
            return Ok((Expr::Atom(Atom::Equals { key }), Multiplicativity::Unknown));
        }
        let name_len = self.rest().bytes().take_while(|b| b.is_ascii_lowercase()).count();
        let name = &self.rest()[..name_len];
        let Some(kind) = WeightKind::parse(name) else {
            return Err(self.error("expected a weight, `selfdot`, `sumin:`, `member:`, `eq:`, `and(`, `or(` or `(`"));
        };
        self.pos += name_len;
        let cmp = self.comparison()?;
        let threshold = if let Comparison::Mod { .. } = cmp {
            Rational64::from_integer(0)
        } else {
            self.rational()?
        };
        let weight = self.weight(kind)?;
        let mult = weight_multiplicativity(ring, kind);
        Ok((Expr::Atom(Atom::Weight { weight, cmp, threshold }), mult))
    }

    fn weight(&mut self, kind: WeightKind) -> Result<Arc<WeightFunction>, PropertyError> {
        if let Some(w) = self.weights.get(kind.name()) {
            return Ok(w.clone());
        }
        let w = Arc::new(WeightFunction::new(self.ambient.ring(), self.lattice, kind)?);
        self.weights.insert(kind.name(), w.clone());
        Ok(w)
    }

    fn comparison(&mut self) -> Result<Comparison, PropertyError> {
        if self.eat(">=") {
            Ok(Comparison::Ge)
        } else if self.eat("<=") {
            Ok(Comparison::Le)
        } else if self.eat("==") {
            Ok(Comparison::Eq)
        } else if self.eat("%") {
            let modulus = self.integer()?;
            if modulus <= 0 {
                return Err(self.error("modulus must be positive"));
            }
            self.expect("==")?;
            let residue = self.integer()?;
            Ok(Comparison::Mod { modulus, residue })
        } else {
            Err(self.error("expected `>=`, `<=`, `==` or `%k==r`"))
        }
    }

    fn integer(&mut self) -> Result<i64, PropertyError> {
        self.skip_ws();
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = rest[..sign + digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += sign + digits;
        Ok(value)
    }

    fn rational(&mut self) -> Result<Rational64, PropertyError> {
        let numer = self.integer()?;
        if self.rest().starts_with('/') {
            self.pos += 1;
            let denom = self.integer()?;
            if denom == 0 {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational64::new(numer, denom))
        } else {
            Ok(Rational64::from_integer(numer))
        }
    }

    /// An element or vector token: runs to whitespace, `,` or `)` outside brackets.
    fn token(&mut self) -> Result<&'a str, PropertyError> {
        self.skip_ws();
        let rest = self.rest();
        let mut depth = 0usize;
        let mut end = rest.len();
        for (i, c) in rest.char_indices() {
            match c {
                '[' | '(' => depth += 1,
                ']' | ')' if depth > 0 => depth -= 1,
                ',' | ')' if depth == 0 => {
                    end = i;
                    break;
                }
                c if c.is_whitespace() && depth == 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        if end == 0 {
            return Err(self.error("expected an element"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    fn peek_code_name(&self) -> Option<&'a str> {
        let rest = self.rest().trim_start();
        self.codes
            .keys()
            .filter(|name| {
                rest.starts_with(name.as_str())
                    && rest[name.len()..]
                        .chars()
                        .next()
                        .is_none_or(|c| !(c.is_alphanumeric() || c == '_'))
            })
            .max_by_key(|name| name.len())
            .map(|name| &rest[..name.len()])
    }

    fn code_name(&mut self) -> Result<&'a str, PropertyError> {
        self.skip_ws();
        match self.peek_code_name() {
            Some(name) => {
                self.pos += name.len();
                Ok(name)
            }
            None => {
                let len = self
                    .rest()
                    .find(|c: char| !(c.is_alphanumeric() || c == '_'))
                    .unwrap_or(self.rest().len());
                Err(PropertyError::UnknownCode(self.rest()[..len].to_string()))
            }
        }
    }
}

/// Whether `w(ux) = w(x)` is known for the built-in weight.
fn weight_multiplicativity(ring: &FiniteRing, kind: WeightKind) -> Multiplicativity {
    match kind {
        WeightKind::Lee | WeightKind::Euclid => {
            // Lee weight is |x| on representatives, so only units +-1 preserve it
            let RingFamily::Zmod { m } = *ring.family() else {
                return Multiplicativity::Unknown;
            };
            if ring.units().iter().all(|&u| u == 1 || u == m - 1) {
                Multiplicativity::Declared
            } else {
                Multiplicativity::Unknown
            }
        }
        _ => Multiplicativity::Declared,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexspace::DEFAULT_CAP;

    fn try_parse(spec: &str, n: usize, text: &str) -> Result<Parsed, PropertyError> {
        let r = Arc::new(FiniteRing::from_spec(spec).unwrap());
        let l = IdealLattice::new(&r).unwrap();
        let a = Ambient::new(r, n, DEFAULT_CAP).unwrap();
        parse(&a, &l, text, &BTreeMap::new(), PropertyOptions::default())
    }

    #[test]
    fn accepts_grammar_forms() {
        for text in [
            "lee>=2",
            " homog >= 3/2 ",
            "euclid%8==0",
            "unit<=2",
            "and(lee>=2, selfdot==0)",
            "or((hamming==1), sumin:2) zero:false",
            "and(lee>=2 zero:true, hamming>=1)",
            "eq:012",
        ] {
            assert!(try_parse("zmod:4", 3, text).is_ok(), "{text}");
        }
        assert!(try_parse("mat:2,2", 1, "sumin:[[1,0],[0,0]]").is_ok());
        assert!(try_parse("mat:2,2", 2, "ranksum>=2").is_ok());
    }

    #[test]
    fn rejects_malformed() {
        for text in ["", "lee", "lee>", "lee>=", "lee>=1/0", "foo>=1", "and(lee>=1)", "lee>=1 zero:maybe", "lee>=1 x"] {
            assert!(
                matches!(try_parse("zmod:4", 2, text), Err(PropertyError::Syntax { .. })),
                "{text}"
            );
        }
        assert!(matches!(
            try_parse("zmod:4", 2, "sumin:7"),
            Err(PropertyError::Ring(_))
        ));
        assert!(matches!(
            try_parse("gf:4", 2, "lee>=1"),
            Err(PropertyError::IncompatibleWeight { .. })
        ));
    }

    #[test]
    fn top_level_zero_suffix() {
        assert_eq!(try_parse("zmod:4", 3, "(lee>=6) zero:true").unwrap().zero_policy, ZeroPolicy::ForceTrue);
        assert_eq!(try_parse("zmod:4", 3, "lee>=6").unwrap().zero_policy, ZeroPolicy::AsIs);
    }

    #[test]
    fn member_lists_stop_at_unregistered_names() {
        let r = Arc::new(FiniteRing::from_spec("zmod:2").unwrap());
        let l = IdealLattice::new(&r).unwrap();
        let a = Ambient::new(r, 2, DEFAULT_CAP).unwrap();
        let mut codes = BTreeMap::new();
        for (name, members) in [("C", vec![0, 1]), ("D", vec![0, 2])] {
            codes.insert(
                name.to_string(),
                NamedCode {
                    name: name.into(),
                    members,
                },
            );
        }
        let opts = PropertyOptions::default();
        assert!(parse(&a, &l, "member:C,D", &codes, opts).is_ok());
        assert!(parse(&a, &l, "or(member:C,D, hamming>=2)", &codes, opts).is_ok());
        assert!(parse(&a, &l, "or(member:C, hamming>=2)", &codes, opts).is_ok());
    }
}
