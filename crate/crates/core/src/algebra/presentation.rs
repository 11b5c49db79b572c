//! Presentation strings `FIELD[vars]/(relations)` and their realization as
//! monomial-quotient algebras.

use crate::error::{Error, Result};
use crate::linalg::{Field, GradedVectorSpace, SparseVec};

use super::graded::GradedAlgebra;
use super::quiver::QuiverPresentation;

/// A commutative polynomial ring modulo monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPresentation {
    pub field: Field,
    /// Variable names with their degrees.
    pub vars: Vec<(String, i64)>,
    /// Relation monomials as exponent vectors.
    pub relations: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraPresentation {
    PolynomialQuotient(MonomialPresentation),
    /// Exterior algebra on generators with the given degrees.
    Exterior { field: Field, generators: Vec<(String, i64)> },
    /// `k[x_1..x_r]/(x_i^p)` over `GF(p)`; generators in degree 1 when graded.
    GroupAlgebraElementaryAbelian { p: u64, rank: usize, graded: bool },
    QuiverWithRelations(QuiverPresentation),
}

impl MonomialPresentation {
    /// Truncation exponent of each variable (`x^e` among the relations), if
    /// any.
    pub fn exponents(&self) -> Vec<Option<u32>> {
        (0..self.vars.len())
            .map(|v| {
                self.relations
                    .iter()
                    .filter(|r| r.iter().enumerate().all(|(w, &e)| (w == v) == (e > 0)))
                    .map(|r| r[v])
                    .min()
            })
            .collect()
    }

    fn is_standard(&self, m: &[u32]) -> bool {
        !self.relations.iter().any(|r| r.iter().zip(m).all(|(a, b)| a <= b))
    }

    /// Top degree when the quotient is finite dimensional.
    pub fn top_degree(&self) -> Option<i64> {
        let ex = self.exponents();
        if ex.iter().any(Option::is_none) {
            return None;
        }
        Some(ex.iter().zip(&self.vars).map(|(e, (_, d))| (e.unwrap() as i64 - 1) * d).sum())
    }

    fn monomials_of_degree(&self, d: i64) -> Vec<Vec<u32>> {
        fn rec(vars: &[(String, i64)], v: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if v == vars.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let dv = vars[v].1;
            let max = if dv == 0 { 0 } else { left / dv };
            for e in (0..=max).rev() {
                cur.push(e as u32);
                rec(vars, v + 1, left - e * dv, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.vars, 0, d, &mut Vec::new(), &mut out);
        out
    }

    fn label(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, (n, _))| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Standard monomials of degree `≤ bound`, ordered by degree and then by
    /// descending exponent vector.
    pub fn realize(&self, bound: i64) -> Result<GradedAlgebra> {
        if self.vars.iter().any(|(_, d)| *d < 0) {
            return Err(Error::Unsupported("negative variable degrees".into()));
        }
        let degree_zero: Vec<usize> = (0..self.vars.len()).filter(|&v| self.vars[v].1 == 0).collect();
        let ex = self.exponents();
        if degree_zero.iter().any(|&v| ex[v].is_none()) {
            return Err(Error::InfiniteDimensional);
        }
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        let mut degrees = Vec::new();
        if degree_zero.is_empty() {
            for d in 0..=bound {
                for m in self.monomials_of_degree(d) {
                    if self.is_standard(&m) {
                        monomials.push(m);
                        degrees.push(d);
                    }
                }
            }
        } else {
            // degree-zero variables: enumerate bounded exponent boxes
            let caps: Vec<u32> = (0..self.vars.len()).map(|v| ex[v].unwrap_or(u32::MAX)).collect();
            let mut all = Vec::new();
            let mut cur = vec![0u32; self.vars.len()];
            enumerate_box(&self.vars, &caps, bound, 0, &mut cur, &mut all);
            all.sort_by(|a, b| {
                let da = degree_of(&self.vars, a);
                let db = degree_of(&self.vars, b);
                let la: u32 = a.iter().sum();
                let lb: u32 = b.iter().sum();
                (da, la).cmp(&(db, lb)).then_with(|| b.cmp(a))
            });
            for m in all {
                if self.is_standard(&m) {
                    degrees.push(degree_of(&self.vars, &m));
                    monomials.push(m);
                }
            }
        }
        let field = &self.field;
        let index = |m: &[u32]| monomials.iter().position(|x| x == m);
        let n = monomials.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &monomials {
            for b in &monomials {
                let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                mult.push(match index(&prod) {
                    Some(k) => SparseVec::unit(k, field),
                    None => SparseVec::new(),
                });
            }
        }
        let generators: Vec<usize> = (0..self.vars.len())
            .filter_map(|v| {
                let mut m = vec![0u32; self.vars.len()];
                m[v] = 1;
                index(&m)
            })
            .collect();
        let gen_var: Vec<usize> = generators.iter().map(|&g| monomials[g].iter().position(|&e| e == 1).unwrap()).collect();
        let words = monomials
            .iter()
            .map(|m| {
                let mut w = Vec::new();
                for (gi, &v) in gen_var.iter().enumerate() {
                    w.extend(std::iter::repeat_n(gi, m[v] as usize));
                }
                w
            })
            .collect();
        let complete = match self.top_degree() {
            Some(top) => top <= bound,
            None => false,
        };
        let labels = monomials.iter().map(|m| self.label(m)).collect();
        let unit = SparseVec::unit(0, field);
        Ok(GradedAlgebra {
            field: field.clone(),
            space: GradedVectorSpace { degrees, labels },
            mult,
            augmentation: Some(unit.clone()),
            unit,
            degree_bound: if complete { None } else { Some(bound) },
            generators,
            words: Some(words),
        })
    }
}

fn degree_of(vars: &[(String, i64)], m: &[u32]) -> i64 {
    m.iter().zip(vars).map(|(&e, (_, d))| e as i64 * d).sum()
}

fn enumerate_box(vars: &[(String, i64)], caps: &[u32], bound: i64, v: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if v == vars.len() {
        if degree_of(vars, cur) <= bound {
            out.push(cur.clone());
        }
        return;
    }
    let mut e = 0u32;
    loop {
        if e >= caps[v] {
            break;
        }
        cur[v] = e;
        if degree_of(vars, cur) > bound {
            break;
        }
        enumerate_box(vars, caps, bound, v + 1, cur, out);
        e += 1;
    }
    cur[v] = 0;
}

/// Exterior algebra on generators of the given degrees: basis the increasing
/// wedge words, ordered by length then lexicographically.
pub fn exterior_algebra(field: &Field, generators: &[(String, i64)]) -> GradedAlgebra {
    let n = generators.len();
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << n)).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index = |s: &[usize]| subsets.iter().position(|x| x == s).unwrap();
    let deg = |s: &[usize]| s.iter().map(|&i| generators[i].1).sum::<i64>();
    let mut mult = Vec::with_capacity(subsets.len() * subsets.len());
    for a in &subsets {
        for b in &subsets {
            mult.push(match wedge(a, b) {
                Some((sign, s)) => SparseVec::single(index(&s), field.from_i64(sign), field),
                None => SparseVec::new(),
            });
        }
    }
    let labels = subsets
        .iter()
        .map(|s| if s.is_empty() { "1".to_string() } else { s.iter().map(|&i| generators[i].0.clone()).collect::<Vec<_>>().join("^") })
        .collect();
    let unit = SparseVec::unit(0, field);
    GradedAlgebra {
        field: field.clone(),
        space: GradedVectorSpace { degrees: subsets.iter().map(|s| deg(s)).collect(), labels },
        mult,
        augmentation: Some(unit.clone()),
        unit,
        degree_bound: None,
        generators: (1..=n).collect(),
        words: Some(subsets.clone()),
    }
}

/// `e_a ∧ e_b` for increasing index lists: `None` if they overlap, else the
/// sign of the sorting permutation and the merged list.
pub fn wedge(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut inversions = 0usize;
    for &x in a {
        for &y in b {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut s: Vec<usize> = a.iter().chain(b).copied().collect();
    s.sort();
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, s))
}

impl AlgebraPresentation {
    pub fn field(&self) -> Result<Field> {
        Ok(match self {
            AlgebraPresentation::PolynomialQuotient(m) => m.field.clone(),
            AlgebraPresentation::Exterior { field, .. } => field.clone(),
            AlgebraPresentation::GroupAlgebraElementaryAbelian { p, .. } => Field::prime(*p)?,
            AlgebraPresentation::QuiverWithRelations(q) => q.field.clone(),
        })
    }
}

/// Realizes a presentation in degrees `≤ degree_bound`.
pub fn realize(pres: &AlgebraPresentation, degree_bound: i64) -> Result<GradedAlgebra> {
    if degree_bound < 0 {
        return Err(Error::Unsupported("degree bound must be non-negative".into()));
    }
    match pres {
        AlgebraPresentation::PolynomialQuotient(m) => m.realize(degree_bound),
        AlgebraPresentation::Exterior { field, generators } => {
            let a = exterior_algebra(field, generators);
            Ok(if a.space.degrees.iter().any(|&d| d > degree_bound) { a.truncate(degree_bound) } else { a })
        }
        AlgebraPresentation::GroupAlgebraElementaryAbelian { p, rank, graded } => {
            Ok(super::group::elementary_abelian_algebra(*p, *rank, *graded)?.truncate_if_needed(degree_bound))
        }
        AlgebraPresentation::QuiverWithRelations(q) => q.realize(degree_bound),
    }
}

impl GradedAlgebra {
    fn truncate_if_needed(self, bound: i64) -> GradedAlgebra {
        if self.space.degrees.iter().any(|&d| d > bound) {
            self.truncate(bound)
        } else {
            self
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax { position: self.pos, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.fail(&[&format!("'{tok}'")])
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.rest().starts_with('-');
        let start = self.pos + neg as usize;
        let digits = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.fail(&["integer"]);
        }
        let text = &self.src[self.pos..start + digits];
        let value = text.parse::<i64>().map_err(|_| Error::Syntax { position: self.pos, expected: vec!["integer".into()] })?;
        self.pos = start + digits;
        Ok(value)
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let mut chars = self.rest().char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return self.fail(&["identifier"]),
        }
        let len = self.rest().chars().take_while(|c| c.is_ascii_alphanumeric() || *c == '_').count();
        let id = self.rest()[..len].to_string();
        self.pos += len;
        Ok(id)
    }

    fn field(&mut self) -> Result<Field> {
        self.skip_ws();
        if self.eat("GF(") {
            let p = self.integer()?;
            if p < 2 || !crate::linalg::field::is_prime(p as u64) {
                return Err(Error::NonPrimeCharacteristic(p.max(0) as u64));
            }
            if self.eat("^") {
                let n = self.integer()?;
                self.expect(";")?;
                let poly_start = self.pos;
                let coeffs = self.univariate()?;
                if coeffs.len() as i64 != n + 1 {
                    return Err(Error::InvalidField(format!(
                        "minimal polynomial {} does not have degree {n}",
                        &self.src[poly_start..self.pos]
                    )));
                }
                self.expect(")")?;
                return Field::finite(p as u64, &coeffs);
            }
            self.expect(")")?;
            return Field::prime(p as u64);
        }
        if self.eat("Q") {
            return Ok(Field::rationals());
        }
        self.fail(&["'Q'", "'GF('"])
    }

    /// Integer-coefficient polynomial in one variable, as a coefficient list
    /// from the constant term up.
    fn univariate(&mut self) -> Result<Vec<i64>> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut var: Option<String> = None;
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = 1;
            if self.eat("-") {
                sign = -1;
            } else if !first && !self.eat("+") {
                break;
            }
            first = false;
            self.skip_ws();
            let mut c = 1;
            let mut has_coeff = false;
            if self.rest().starts_with(|ch: char| ch.is_ascii_digit()) {
                c = self.integer()?;
                has_coeff = true;
                self.eat("*");
            }
            self.skip_ws();
            let mut e = 0;
            if self.rest().starts_with(|ch: char| ch.is_ascii_alphabetic()) {
                let v = self.ident()?;
                if let Some(prev) = &var {
                    if *prev != v {
                        return self.fail(&[prev.as_str()]);
                    }
                }
                var = Some(v);
                e = 1;
                if self.eat("^") {
                    e = self.integer()?;
                }
            } else if !has_coeff {
                return self.fail(&["coefficient", "identifier"]);
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += sign * c;
        }
        Ok(coeffs)
    }

    fn vars(&mut self) -> Result<Vec<(String, i64)>> {
        self.expect("[")?;
        let mut vars = Vec::new();
        if self.eat("]") {
            return Ok(vars);
        }
        loop {
            let name = self.ident()?;
            let mut degree = 1;
            if self.eat(":") {
                let at = self.pos;
                degree = self.integer()?;
                if degree < 1 {
                    self.pos = at;
                    return self.fail(&["positive degree"]);
                }
            }
            if vars.iter().any(|(n, _)| *n == name) {
                return self.fail(&["new variable name"]);
            }
            vars.push((name, degree));
            if self.eat(",") {
                continue;
            }
            self.expect("]")?;
            return Ok(vars);
        }
    }

    fn relation(&mut self, vars: &[(String, i64)]) -> Result<Vec<u32>> {
        self.skip_ws();
        let start = self.pos;
        let end = self.rest().find([',', ')']).map_or(self.src.len(), |i| self.pos + i);
        let text = self.src[start..end].trim();
        if text.contains(['+', '-']) || text.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(Error::NonMonomialRelation(text.to_string()));
        }
        let mut exps = vec![0u32; vars.len()];
        loop {
            let at = self.pos;
            let name = self.ident()?;
            let Some(v) = vars.iter().position(|(n, _)| *n == name) else {
                self.pos = at;
                let names: Vec<&str> = vars.iter().map(|(n, _)| n.as_str()).collect();
                return self.fail(&names);
            };
            let mut e = 1;
            if self.eat("^") {
                let at = self.pos;
                e = self.integer()?;
                if e < 1 {
                    self.pos = at;
                    return self.fail(&["positive exponent"]);
                }
            }
            exps[v] += e as u32;
            if !self.eat("*") {
                return Ok(exps);
            }
        }
    }
}

/// Parses `FIELD '[' vars ']' [ '/(' relations ')' ]`.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let mut p = Parser { src: text, pos: 0 };
    let field = p.field()?;
    let vars = p.vars()?;
    let mut relations = Vec::new();
    if p.eat("/") {
        p.expect("(")?;
        loop {
            relations.push(p.relation(&vars)?);
            if p.eat(",") {
                continue;
            }
            p.expect(")")?;
            break;
        }
    }
    p.skip_ws();
    if p.pos != text.len() {
        return p.fail(&["end of input"]);
    }
    Ok(AlgebraPresentation::PolynomialQuotient(MonomialPresentation { field, vars, relations }))
}

/// Parses a polynomial in the variables of `algebra` (a realized monomial
/// algebra) with integer or rational coefficients into an element.
pub fn parse_element(algebra: &GradedAlgebra, text: &str) -> Result<SparseVec> {
    let f = &algebra.field;
    let mut p = Parser { src: text, pos: 0 };
    let mut acc = SparseVec::new();
    let mut first = true;
    loop {
        p.skip_ws();
        if p.pos == text.len() {
            if first {
                return p.fail(&["term"]);
            }
            return Ok(acc);
        }
        let mut sign = f.one();
        if p.eat("-") {
            sign = f.neg(&sign);
        } else if !first && !p.eat("+") {
            return p.fail(&["'+'", "'-'", "end of input"]);
        }
        first = false;
        p.skip_ws();
        let mut coeff = f.one();
        let mut term = algebra.unit.clone();
        let mut need_factor = true;
        if p.rest().starts_with(|c: char| c.is_ascii_digit()) {
            let num = p.integer()?;
            coeff = f.from_i64(num);
            if p.eat("/") {
                let den = p.integer()?;
                coeff = f.div(&coeff, &f.from_i64(den))?;
            }
            need_factor = p.eat("*");
        }
        while need_factor {
            let at = p.pos;
            let name = p.ident()?;
            let factor = if let Some(g) = algebra.generators.iter().position(|&g| algebra.label(g) == name) {
                SparseVec::unit(algebra.generators[g], f)
            } else if let Some(i) = algebra.index_of(&name) {
                SparseVec::unit(i, f)
            } else {
                p.pos = at;
                let names: Vec<&str> = algebra.generators.iter().map(|&g| algebra.label(g)).collect();
                return p.fail(&names);
            };
            let mut e = 1;
            if p.eat("^") {
                e = p.integer()?;
            }
            for _ in 0..e {
                term = algebra.mul(&term, &factor);
            }
            need_factor = p.eat("*");
        }
        acc = acc.add_scaled(&f.mul(&sign, &coeff), &term, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(text: &str) -> MonomialPresentation {
        match parse_presentation(text).unwrap() {
            AlgebraPresentation::PolynomialQuotient(m) => m,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parses_truncated_polynomial_ring() {
        let m = mono("GF(2)[x,y]/(x^2,y^2)");
        assert_eq!(m.vars.len(), 2);
        assert_eq!(m.exponents(), vec![Some(2), Some(2)]);
        assert_eq!(m.field, Field::prime(2).unwrap());
    }

    #[test]
    fn parses_polynomial_ring_without_relations() {
        let m = mono("Q[x]");
        assert_eq!(m.field, Field::rationals());
        assert_eq!(m.exponents(), vec![None]);
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        assert!(matches!(parse_presentation("GF(6)[x]"), Err(Error::NonPrimeCharacteristic(6))));
    }

    #[test]
    fn reports_syntax_errors_with_position() {
        match parse_presentation("Q[x,]") {
            Err(Error::Syntax { position, expected }) => {
                assert_eq!(position, 4);
                assert_eq!(expected, vec!["identifier".to_string()]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_presentation("R[x]"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_presentation("Q[x]/(z)"), Err(Error::Syntax { position: 6, .. })));
    }

    #[test]
    fn rejects_non_monomial_relations() {
        assert!(matches!(parse_presentation("Q[x,y]/(x^2-y)"), Err(Error::NonMonomialRelation(_))));
        assert!(matches!(parse_presentation("Q[x]/(2*x)"), Err(Error::NonMonomialRelation(_))));
    }

    #[test]
    fn parses_extension_fields_and_degrees() {
        let m = mono("GF(2^2;a^2+a+1)[x:2, y]");
        assert_eq!(m.field.order(), Some(4));
        assert_eq!(m.vars, vec![("x".to_string(), 2), ("y".to_string(), 1)]);
        assert!(parse_presentation("GF(2^2;a^2+1)[x]").is_err());
    }

    #[test]
    fn realizes_truncated_ring_basis() {
        let a = realize(&parse_presentation("GF(2)[x,y]/(x^2,y^2)").unwrap(), 4).unwrap();
        assert_eq!(a.space.labels, vec!["1", "x", "y", "x*y"]);
        assert_eq!(a.space.degrees, vec![0, 1, 1, 2]);
        assert_eq!(a.degree_bound, None);
        assert_eq!(a.check(), None);
    }

    #[test]
    fn realizes_polynomial_ring_in_each_degree() {
        let a = realize(&parse_presentation("Q[x]").unwrap(), 5).unwrap();
        assert_eq!(a.space.dims().values().copied().collect::<Vec<_>>(), vec![1; 6]);
        assert_eq!(a.degree_bound, Some(5));
        assert_eq!(a.check(), None);
    }

    #[test]
    fn realization_is_stable_under_raising_the_bound() {
        let pres = parse_presentation("Q[x,y]/(x*y^2)").unwrap();
        let small = realize(&pres, 3).unwrap();
        let big = realize(&pres, 5).unwrap();
        assert_eq!(big.truncate(3), small);
    }

    #[test]
    fn augmentation_ideal_has_codimension_one() {
        let a = realize(&parse_presentation("GF(3)[x,y]/(x^3,y^2)").unwrap(), 10).unwrap();
        let ideal = a.augmentation_ideal().unwrap();
        assert_eq!(ideal.len(), a.dim() - 1);
        for v in &ideal {
            assert_eq!(v.get(0, &a.field), a.field.zero());
        }
    }

    #[test]
    fn exterior_algebra_anticommutes() {
        let q = Field::rationals();
        let a = exterior_algebra(&q, &[("e1".into(), 1), ("e2".into(), 1)]);
        assert_eq!(a.space.dims().values().copied().collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(a.check(), None);
        let e12 = a.mul_basis(1, 2).clone();
        assert_eq!(a.mul_basis(2, 1), &e12.neg(&q));
        assert!(a.mul_basis(1, 1).is_zero());
    }

    #[test]
    fn parses_elements() {
        let a = realize(&parse_presentation("Q[x,y]").unwrap(), 3).unwrap();
        let v = parse_element(&a, "x*y - 1/2*x^2 + 3").unwrap();
        let q = &a.field;
        assert_eq!(v.get(0, q), q.from_i64(3));
        assert_eq!(v.get(a.index_of("x*y").unwrap(), q), q.from_ratio(1, 1).unwrap());
        assert_eq!(v.get(a.index_of("x^2").unwrap(), q), q.from_ratio(-1, 2).unwrap());
    }
}
