//! Line-oriented structure-constant files (`.alg`, `.rep`, `.tri`).
//!
//! ```text
//! # Sweedler's algebra
//! field Q
//! dim 4
//! basis 1 g x gx
//! mul 1 1 0 1
//! unit 0 1
//! ```
//!
//! Indices are 0-based. `mul i j k c` reads `b_i b_j ∋ c b_k`, `comul i j k c`
//! reads `Δ(b_i) ∋ c b_j ⊗ b_k`, `antipode i j c` reads `S(b_i) ∋ c b_j` and
//! `rmat i j c` reads `R ∋ c b_i ⊗ b_j`. Representation files add `module d`
//! and `act i j k c` (`b_i · m_j ∋ c m_k`), `lcoact i j k c`
//! (`m_i ↦ c b_j ⊗ m_k`) or `rcoact i j k c` (`m_i ↦ c m_j ⊗ b_k`).

use std::fmt::Write as _;

use hopfkit_core::algebra::{Algebra, Coalgebra, Entry};
use hopfkit_core::hopf::Bialgebra;
use hopfkit_core::rep::{Bicomodule, Comodule, Module, Rep, Side};
use hopfkit_core::trimodule::Trimodule;
use hopfkit_core::{Error, Field, Matrix, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Alg,
    Rep,
    Tri,
}

impl Kind {
    pub fn extension(self) -> &'static str {
        match self {
            Kind::Alg => "alg",
            Kind::Rep => "rep",
            Kind::Tri => "tri",
        }
    }
}

/// A parsed structure-constant file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub module_dim: Option<usize>,
    pub mul: Vec<Entry>,
    pub comul: Vec<Entry>,
    pub unit: Vec<(usize, Scalar)>,
    pub counit: Vec<(usize, Scalar)>,
    pub antipode: Vec<(usize, usize, Scalar)>,
    pub act: Vec<Entry>,
    pub lcoact: Vec<Entry>,
    pub rcoact: Vec<Entry>,
    pub rmat: Vec<(usize, usize, Scalar)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    let words: Vec<&str> = t.split_whitespace().collect();
    let prime = |s: &str| s.parse::<u64>().map_err(|_| Error::Invalid(format!("unknown field `{t}`")));
    match words.as_slice() {
        ["Q"] | ["QQ"] => Ok(Field::Rationals),
        ["Fp", p] => Field::prime(prime(p)?),
        [w] if w.starts_with("Fp") => Field::prime(prime(&w[2..])?),
        [w] if w.starts_with('F') => Field::prime(prime(&w[1..])?),
        _ => Err(Error::Invalid(format!("unknown field `{t}`"))),
    }
}

struct Parser {
    field: Option<Field>,
    dim: Option<usize>,
    spec: SpecFile,
}

impl Parser {
    fn field(&self, line: usize) -> Result<Field> {
        self.field.ok_or_else(|| parse_error(line, "`field` must come first"))
    }

    fn dim(&self, line: usize) -> Result<usize> {
        self.dim.ok_or_else(|| parse_error(line, "`dim` must come before structure constants"))
    }

    fn module_dim(&self, line: usize) -> Result<usize> {
        self.spec.module_dim.ok_or_else(|| parse_error(line, "`module` must come before the action or coaction"))
    }

    fn scalar(&self, line: usize, text: &str) -> Result<Scalar> {
        self.field(line)?.parse(text).map_err(|_| parse_error(line, format!("malformed scalar `{text}`")))
    }

    fn index(line: usize, text: &str, bound: usize) -> Result<usize> {
        let i: usize = text.parse().map_err(|_| parse_error(line, format!("malformed index `{text}`")))?;
        if i >= bound {
            return Err(parse_error(line, format!("index {i} out of range (bound {bound})")));
        }
        Ok(i)
    }

    fn args<'a>(line: usize, directive: &str, args: &'a [&'a str], n: usize) -> Result<&'a [&'a str]> {
        if args.len() != n {
            return Err(parse_error(line, format!("`{directive}` takes {n} arguments, got {}", args.len())));
        }
        Ok(args)
    }

    /// Three indices with per-position bounds and a scalar.
    fn entry(&self, line: usize, directive: &str, args: &[&str], bounds: [usize; 3]) -> Result<Entry> {
        let a = Self::args(line, directive, args, 4)?;
        Ok((
            Self::index(line, a[0], bounds[0])?,
            Self::index(line, a[1], bounds[1])?,
            Self::index(line, a[2], bounds[2])?,
            self.scalar(line, a[3])?,
        ))
    }

    fn line(&mut self, no: usize, text: &str) -> Result<()> {
        let text = text.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            return Ok(());
        }
        let mut words = text.split_whitespace();
        let directive = words.next().expect("nonempty line");
        let args: Vec<&str> = words.collect();
        match directive {
            "field" => {
                if self.field.is_some() {
                    return Err(parse_error(no, "duplicate `field`"));
                }
                self.field = Some(parse_field(&args.join(" ")).map_err(|e| parse_error(no, e.to_string()))?);
            }
            "dim" => {
                self.field(no)?;
                if self.dim.is_some() {
                    return Err(parse_error(no, "duplicate `dim`"));
                }
                let a = Self::args(no, directive, &args, 1)?;
                self.dim = Some(a[0].parse().map_err(|_| parse_error(no, format!("malformed dimension `{}`", a[0])))?);
            }
            "basis" => {
                let n = self.dim(no)?;
                if args.len() != n || !self.spec.basis.is_empty() {
                    return Err(parse_error(no, format!("`basis` needs exactly {n} labels, once")));
                }
                self.spec.basis = args.iter().map(|s| s.to_string()).collect();
            }
            "module" => {
                self.dim(no)?;
                if self.spec.module_dim.is_some() {
                    return Err(parse_error(no, "duplicate `module`"));
                }
                let a = Self::args(no, directive, &args, 1)?;
                self.spec.module_dim =
                    Some(a[0].parse().map_err(|_| parse_error(no, format!("malformed dimension `{}`", a[0])))?);
            }
            "mul" | "comul" => {
                let n = self.dim(no)?;
                let e = self.entry(no, directive, &args, [n, n, n])?;
                if directive == "mul" { &mut self.spec.mul } else { &mut self.spec.comul }.push(e);
            }
            "unit" | "counit" => {
                let n = self.dim(no)?;
                let a = Self::args(no, directive, &args, 2)?;
                let e = (Self::index(no, a[0], n)?, self.scalar(no, a[1])?);
                if directive == "unit" { &mut self.spec.unit } else { &mut self.spec.counit }.push(e);
            }
            "antipode" | "rmat" => {
                let n = self.dim(no)?;
                let a = Self::args(no, directive, &args, 3)?;
                let e = (Self::index(no, a[0], n)?, Self::index(no, a[1], n)?, self.scalar(no, a[2])?);
                if directive == "antipode" { &mut self.spec.antipode } else { &mut self.spec.rmat }.push(e);
            }
            "act" => {
                let (n, d) = (self.dim(no)?, self.module_dim(no)?);
                let e = self.entry(no, directive, &args, [n, d, d])?;
                self.spec.act.push(e);
            }
            "lcoact" => {
                let (n, d) = (self.dim(no)?, self.module_dim(no)?);
                let e = self.entry(no, directive, &args, [d, n, d])?;
                self.spec.lcoact.push(e);
            }
            "rcoact" => {
                let (n, d) = (self.dim(no)?, self.module_dim(no)?);
                let e = self.entry(no, directive, &args, [d, d, n])?;
                self.spec.rcoact.push(e);
            }
            other => return Err(parse_error(no, format!("unknown directive `{other}`"))),
        }
        Ok(())
    }
}

pub fn parse_spec(text: &str) -> Result<SpecFile> {
    let mut p = Parser {
        field: None,
        dim: None,
        spec: SpecFile {
            field: Field::Rationals,
            dim: 0,
            basis: Vec::new(),
            module_dim: None,
            mul: Vec::new(),
            comul: Vec::new(),
            unit: Vec::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
            act: Vec::new(),
            lcoact: Vec::new(),
            rcoact: Vec::new(),
            rmat: Vec::new(),
        },
    };
    for (i, line) in text.lines().enumerate() {
        p.line(i + 1, line)?;
    }
    let last = text.lines().count().max(1);
    p.spec.field = p.field(last)?;
    p.spec.dim = p.dim(last)?;
    if p.spec.basis.is_empty() {
        p.spec.basis = (0..p.spec.dim).map(|i| format!("b{i}")).collect();
    }
    Ok(p.spec)
}

fn dense(f: Field, rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Matrix {
    Matrix::from_entries(f, rows, cols, entries.into_iter().collect::<Vec<_>>())
}

impl SpecFile {
    pub fn kind(&self) -> Kind {
        let coacts = !self.lcoact.is_empty() && !self.rcoact.is_empty();
        match self.module_dim {
            Some(_) if coacts => Kind::Tri,
            Some(_) => Kind::Rep,
            None => Kind::Alg,
        }
    }

    pub fn algebra(&self) -> Result<Algebra> {
        Algebra::from_table(self.field, Some(self.basis.clone()), self.dim, &self.mul, &self.unit)
    }

    pub fn coalgebra(&self) -> Result<Coalgebra> {
        Coalgebra::from_table(self.field, Some(self.basis.clone()), self.dim, &self.comul, &self.counit)
    }

    pub fn has_coalgebra(&self) -> bool {
        !self.comul.is_empty()
    }

    pub fn bialgebra(&self) -> Result<Bialgebra> {
        if !self.has_coalgebra() {
            return Err(Error::Invalid("file has no comultiplication".into()));
        }
        Bialgebra::new(self.algebra()?, self.coalgebra()?)
    }

    /// Stated antipode, if the file lists one.
    pub fn antipode(&self) -> Option<Matrix> {
        if self.antipode.is_empty() {
            return None;
        }
        Some(dense(self.field, self.dim, self.dim, self.antipode.iter().map(|(i, j, c)| (*j, *i, c.clone()))))
    }

    /// Stated R-matrix as a column in `B ⊗ B`.
    pub fn rmatrix(&self) -> Option<Matrix> {
        if self.rmat.is_empty() {
            return None;
        }
        let n = self.dim;
        Some(dense(self.field, n * n, 1, self.rmat.iter().map(|(i, j, c)| (i * n + j, 0, c.clone()))))
    }

    fn carrier(&self) -> Result<usize> {
        self.module_dim.ok_or_else(|| Error::Invalid("file declares no module".into()))
    }

    pub fn module(&self, a: &Algebra) -> Result<Module> {
        Module::from_table(a, self.carrier()?, &self.act)
    }

    pub fn comodule(&self, c: &Coalgebra, side: Side) -> Result<Comodule> {
        let table = match side {
            Side::Left => &self.lcoact,
            Side::Right => &self.rcoact,
        };
        Comodule::from_table(c, side, self.carrier()?, table)
    }

    pub fn trimodule(&self, b: &Bialgebra) -> Result<Trimodule> {
        let bi = Bicomodule::new(self.comodule(&b.coalgebra, Side::Left)?, self.comodule(&b.coalgebra, Side::Right)?)?;
        Trimodule::new(b, bi, self.module(&b.algebra)?.action)
    }
}

fn header(out: &mut String, field: Field, labels: &[String]) {
    let _ = writeln!(out, "field {field}");
    let _ = writeln!(out, "dim {}", labels.len());
    let _ = writeln!(out, "basis {}", labels.join(" "));
}

fn table4(out: &mut String, directive: &str, t: &[Entry]) {
    for (i, j, k, c) in t {
        let _ = writeln!(out, "{directive} {i} {j} {k} {c}");
    }
}

fn write_algebra(out: &mut String, a: &Algebra) {
    table4(out, "mul", &a.table());
    for (i, _, c) in a.unit.entries() {
        let _ = writeln!(out, "unit {i} {c}");
    }
}

fn write_coalgebra(out: &mut String, c: &Coalgebra) {
    table4(out, "comul", &c.table());
    for (_, i, x) in c.counit.entries() {
        let _ = writeln!(out, "counit {i} {x}");
    }
}

pub fn export_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    header(&mut out, a.field(), &a.labels);
    write_algebra(&mut out, a);
    out
}

pub fn export_bialgebra(b: &Bialgebra, antipode: Option<&Matrix>, rmat: Option<&Matrix>) -> String {
    let mut out = String::new();
    header(&mut out, b.field(), &b.algebra.labels);
    write_algebra(&mut out, &b.algebra);
    write_coalgebra(&mut out, &b.coalgebra);
    if let Some(s) = antipode {
        let mut t: Vec<_> = s.entries().map(|(j, i, c)| (i, j, c.clone())).collect();
        t.sort_by_key(|e| (e.0, e.1));
        for (i, j, c) in t {
            let _ = writeln!(out, "antipode {i} {j} {c}");
        }
    }
    if let Some(r) = rmat {
        let n = b.dim();
        for (ij, _, c) in r.entries() {
            let _ = writeln!(out, "rmat {} {} {c}", ij / n, ij % n);
        }
    }
    out
}

pub fn export_module(b: &Bialgebra, m: &Module) -> String {
    let mut out = export_bialgebra(b, None, None);
    let _ = writeln!(out, "module {}", m.dim());
    table4(&mut out, "act", &m.table());
    out
}

pub fn export_trimodule(t: &Trimodule) -> String {
    let mut out = export_bialgebra(&t.bialgebra, None, None);
    let _ = writeln!(out, "module {}", t.dim());
    table4(&mut out, "act", &t.module().table());
    table4(&mut out, "lcoact", &t.left().table());
    table4(&mut out, "rcoact", &t.right().table());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfkit_core::catalog::{build_example, ExampleName};
    use hopfkit_core::hopf::Hopf;

    #[test]
    fn field_algebra() {
        let s = parse_spec("field Q\ndim 1\nbasis 1\nmul 0 0 0 1\nunit 0 1").unwrap();
        assert_eq!(s.kind(), Kind::Alg);
        assert_eq!(s.algebra().unwrap(), Algebra::ground(Field::Rationals));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("field Q\ndim 2\nmul 0 5 0 1", 3),
            ("field Q\ndim 2\n# comment\nfrobnicate 1", 4),
            ("field Q\ndim 2\nunit 0 1/0", 3),
            ("dim 2", 1),
            ("field Q\ndim 2\nact 0 0 0 1", 3),
            ("field F4\n", 1),
        ];
        for (text, line) in cases {
            match parse_spec(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("Fp 7").unwrap(), Field::Prime(7));
        assert_eq!(parse_field("F3").unwrap(), Field::Prime(3));
        assert_eq!(parse_field("Q").unwrap(), Field::Rationals);
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn sweedler_round_trip() {
        let b = build_example(ExampleName::Sweedler, Field::Rationals).unwrap().bialgebra;
        let h = Hopf::new(b.clone()).unwrap();
        let text = export_bialgebra(&b, Some(&h.antipode), None);
        let s = parse_spec(&text).unwrap();
        assert_eq!(s.bialgebra().unwrap(), b);
        assert_eq!(s.antipode().unwrap(), h.antipode);
        assert_eq!(export_bialgebra(&s.bialgebra().unwrap(), s.antipode().as_ref(), None), text);
    }

    #[test]
    fn trimodule_round_trip() {
        let b = build_example(ExampleName::MonoidS, Field::prime(5).unwrap()).unwrap().bialgebra;
        let t = Trimodule::bullet_square(&b);
        let s = parse_spec(&export_trimodule(&t)).unwrap();
        assert_eq!(s.kind(), Kind::Tri);
        assert_eq!(s.trimodule(&s.bialgebra().unwrap()).unwrap(), t);
    }
}
