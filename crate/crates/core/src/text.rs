//! Plain-text input formats and canonical text/JSON rendering.
//!
//! Ideal documents:
//!
//! ```text
//! # comment
//! vars 3
//! x1*x2, x2*x3^2
//! ```
//!
//! Complex documents take facets either as digit runs (`{124}`, only for
//! `n <= 9`) or as lists (`{1,2,4}`):
//!
//! ```text
//! vertices 6
//! {124},{126},{135}
//! ```

use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{Face, Interval, Partition, SimplicialComplex};
use crate::decomposition::{StanleyDecomposition, Target};
use crate::error::ParseError;
use crate::monomial::{Monomial, MonomialIdeal};

/// How faces are written: `{124}` or `{1,2,4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceStyle {
    Compact,
    List,
}

impl FaceStyle {
    /// The style actually used for `complex`: compact is impossible above
    /// nine vertices and indistinguishable when no facet has two vertices.
    pub fn normalized(self, complex: &SimplicialComplex) -> FaceStyle {
        if complex.vertex_count() > 9 {
            FaceStyle::List
        } else if complex.facets().iter().all(|f| f.len() < 2) {
            FaceStyle::Compact
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Ideal,
    Complex,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex, FaceStyle),
}

impl InputDocument {
    pub fn complex(complex: SimplicialComplex, style: FaceStyle) -> Self {
        let style = style.normalized(&complex);
        InputDocument::Complex(complex, style)
    }

    pub fn kind(&self) -> DocumentKind {
        match self {
            InputDocument::Ideal(_) => DocumentKind::Ideal,
            InputDocument::Complex(..) => DocumentKind::Complex,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            InputDocument::Ideal(i) => i.arity(),
            InputDocument::Complex(c, _) => c.vertex_count(),
        }
    }
}

/// Source text with comments blanked out, one entry per 1-based line.
struct Lines<'a> {
    lines: Vec<Line<'a>>,
}

/// 1-based line number and the text before any comment.
type Line<'a> = (usize, &'a str);

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .collect();
        Lines { lines }
    }

    /// Splits off the header line, returning `(keyword, n, remaining lines)`.
    fn header(&self) -> Result<(&'a str, usize, &[Line<'a>]), ParseError> {
        let Some(pos) = self.lines.iter().position(|(_, l)| !l.trim().is_empty()) else {
            return Err(ParseError::new(1, 1, "empty document"));
        };
        let (line, text) = self.lines[pos];
        let column = text.len() - text.trim_start().len() + 1;
        let mut words = text.split_whitespace();
        let keyword = words.next().unwrap_or("");
        let n = match (words.next(), words.next()) {
            (Some(n), None) => n.parse::<usize>().map_err(|_| {
                ParseError::new(
                    line,
                    column,
                    format!("`{keyword}` expects a non-negative count, got `{n}`"),
                )
            })?,
            _ => {
                return Err(ParseError::new(
                    line,
                    column,
                    "header must be `vars <n>` or `vertices <n>`",
                ))
            }
        };
        Ok((keyword, n, &self.lines[pos + 1..]))
    }
}

/// Non-whitespace characters of `s` with their 1-based columns.
fn columns(s: &str, start: usize) -> Vec<(char, usize)> {
    s.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (c, start + i))
        .collect()
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    match parse_document(text)? {
        InputDocument::Ideal(i) => Ok(i),
        InputDocument::Complex(..) => Err(ParseError::new(1, 1, "expected `vars <n>` header")),
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    match parse_document(text)? {
        InputDocument::Complex(c, _) => Ok(c),
        InputDocument::Ideal(_) => Err(ParseError::new(1, 1, "expected `vertices <n>` header")),
    }
}

/// Parses either document kind, dispatching on the header keyword.
pub fn parse_document(text: &str) -> Result<InputDocument, ParseError> {
    let lines = Lines::new(text);
    let (keyword, n, body) = lines.header()?;
    match keyword {
        "vars" => parse_ideal_body(n, body).map(InputDocument::Ideal),
        "vertices" => parse_complex_body(n, body),
        other => {
            let (line, _) = lines
                .lines
                .iter()
                .find(|(_, l)| !l.trim().is_empty())
                .copied()
                .unwrap_or((1, ""));
            Err(ParseError::new(
                line,
                1,
                format!("unknown header `{other}`; expected `vars` or `vertices`"),
            ))
        }
    }
}

fn parse_ideal_body(n: usize, body: &[(usize, &str)]) -> Result<MonomialIdeal, ParseError> {
    let mut gens = Vec::new();
    for &(line, text) in body {
        let mut start = 1;
        for item in text.split(',') {
            let chars = columns(item, start);
            start += item.chars().count() + 1;
            if chars.is_empty() {
                continue;
            }
            gens.push(parse_monomial(n, line, &chars)?);
        }
    }
    Ok(MonomialIdeal::minimalize(n, gens).expect("monomials parsed at arity n"))
}

fn parse_monomial(n: usize, line: usize, chars: &[(char, usize)]) -> Result<Monomial, ParseError> {
    if let [('1', _)] = chars {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u32; n];
    let mut pos = 0;
    let end_col = chars.last().map_or(1, |&(_, c)| c + 1);
    let col = |pos: usize| chars.get(pos).map_or(end_col, |&(_, c)| c);
    let number = |pos: &mut usize| -> Option<u64> {
        let begin = *pos;
        while chars.get(*pos).is_some_and(|(c, _)| c.is_ascii_digit()) {
            *pos += 1;
        }
        let digits: String = chars[begin..*pos].iter().map(|&(c, _)| c).collect();
        digits.parse().ok()
    };
    loop {
        match chars.get(pos) {
            Some(('x', _)) => pos += 1,
            _ => return Err(ParseError::new(line, col(pos), "expected `x<i>` or `1`")),
        }
        let index_col = col(pos);
        let index = number(&mut pos)
            .ok_or_else(|| ParseError::new(line, index_col, "expected variable index after `x`"))?;
        if index == 0 || index > n as u64 {
            return Err(ParseError::new(
                line,
                index_col,
                format!("variable index {index} out of range 1..={n}"),
            ));
        }
        let mut e = 1u64;
        if let Some(('^', _)) = chars.get(pos) {
            pos += 1;
            let exp_col = col(pos);
            e = number(&mut pos)
                .ok_or_else(|| ParseError::new(line, exp_col, "expected exponent after `^`"))?;
            if e == 0 || e > u64::from(u32::MAX) {
                return Err(ParseError::new(
                    line,
                    exp_col,
                    "exponent must be a positive 32-bit integer",
                ));
            }
        }
        let slot = &mut exps[index as usize - 1];
        *slot = slot
            .checked_add(e as u32)
            .ok_or_else(|| ParseError::new(line, index_col, "exponent overflow"))?;
        match chars.get(pos) {
            None => return Ok(Monomial::new(exps)),
            Some(('*', _)) => pos += 1,
            Some(_) => {
                return Err(ParseError::new(
                    line,
                    col(pos),
                    "expected `*`, `,` or end of line",
                ))
            }
        }
    }
}

fn parse_complex_body(n: usize, body: &[(usize, &str)]) -> Result<InputDocument, ParseError> {
    let chars: Vec<(char, usize, usize)> = body
        .iter()
        .flat_map(|&(line, text)| text.chars().enumerate().map(move |(i, c)| (c, line, i + 1)))
        .collect();
    let mut facets = Vec::new();
    let mut list_style = false;
    let mut pos = 0;
    while pos < chars.len() {
        let (c, line, col) = chars[pos];
        if c.is_whitespace() || c == ',' {
            pos += 1;
            continue;
        }
        if c != '{' {
            return Err(ParseError::new(
                line,
                col,
                format!("expected `{{`, found `{c}`"),
            ));
        }
        let close = chars[pos..]
            .iter()
            .position(|&(c, _, _)| c == '}')
            .map(|off| pos + off)
            .ok_or_else(|| ParseError::new(line, col, "unterminated facet"))?;
        let inner = &chars[pos + 1..close];
        if let Some(&(c, l, cl)) = inner.iter().find(|(c, _, _)| *c == '{') {
            return Err(ParseError::new(
                l,
                cl,
                format!("unexpected `{c}` inside facet"),
            ));
        }
        let (face, listed) = parse_face(n, inner, (line, col))?;
        list_style |= listed;
        facets.push(face);
        pos = close + 1;
    }
    let complex =
        SimplicialComplex::from_facets(n, facets).expect("vertices checked while parsing");
    let style = if list_style {
        FaceStyle::List
    } else {
        FaceStyle::Compact
    };
    Ok(InputDocument::complex(complex, style))
}

/// Parses the characters between braces; the flag reports list style.
fn parse_face(
    n: usize,
    inner: &[(char, usize, usize)],
    open: (usize, usize),
) -> Result<(Face, bool), ParseError> {
    let vertex = |digits: &[(char, usize, usize)]| -> Result<usize, ParseError> {
        let (_, line, col) = digits[0];
        let s: String = digits.iter().map(|&(c, _, _)| c).collect();
        let v: usize = s
            .parse()
            .map_err(|_| ParseError::new(line, col, format!("invalid vertex `{s}`")))?;
        if v == 0 || v > n {
            return Err(ParseError::new(
                line,
                col,
                format!("vertex {v} out of range 1..={n}"),
            ));
        }
        Ok(v)
    };
    let compact: Vec<_> = inner
        .iter()
        .copied()
        .filter(|(c, _, _)| !c.is_whitespace())
        .collect();
    if compact.iter().any(|(c, _, _)| *c == ',') {
        let mut verts = Vec::new();
        for part in compact.split(|(c, _, _)| *c == ',') {
            if part.is_empty() {
                let (l, c) = inner.first().map_or(open, |&(_, l, c)| (l, c));
                return Err(ParseError::new(l, c, "empty vertex in facet list"));
            }
            verts.push(vertex(part)?);
        }
        return Ok((Face::new(verts), true));
    }
    match compact.len() {
        0 => Ok((Face::empty(), false)),
        1 => Ok((Face::new([vertex(&compact)?]), false)),
        _ => {
            if n > 9 {
                let (_, l, c) = compact[0];
                return Err(ParseError::new(
                    l,
                    c,
                    "digit-run facets need at most 9 vertices; write facets as lists like {1,10}",
                ));
            }
            let verts = compact
                .iter()
                .map(|d| vertex(std::slice::from_ref(d)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((Face::new(verts), false))
        }
    }
}

pub fn render_face(face: &Face, style: FaceStyle) -> String {
    let sep = match style {
        FaceStyle::Compact => "",
        FaceStyle::List => ",",
    };
    let inner: Vec<String> = face.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(sep))
}

pub fn render_interval(iv: &Interval, style: FaceStyle) -> String {
    format!(
        "[{}, {}]",
        render_face(iv.lower(), style),
        render_face(iv.upper(), style)
    )
}

pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    let mut out = format!("vars {}\n", ideal.arity());
    if !gens.is_empty() {
        out.push_str(&gens.join(", "));
        out.push('\n');
    }
    out
}

pub fn render_complex(complex: &SimplicialComplex, style: FaceStyle) -> String {
    let style = style.normalized(complex);
    let facets: Vec<String> = complex
        .facets()
        .iter()
        .map(|f| render_face(f, style))
        .collect();
    let mut out = format!("vertices {}\n", complex.vertex_count());
    if !facets.is_empty() {
        out.push_str(&facets.join(","));
        out.push('\n');
    }
    out
}

pub fn render_document(doc: &InputDocument) -> String {
    match doc {
        InputDocument::Ideal(i) => render_ideal(i),
        InputDocument::Complex(c, style) => render_complex(c, *style),
    }
}

/// One `u * K[...]` line per space.
pub fn render_decomposition(d: &StanleyDecomposition) -> String {
    d.to_string()
}

/// Partition lines, optionally followed by the r-vector and niceness.
pub fn render_partition(
    p: &Partition,
    style: FaceStyle,
    with_r_vector: bool,
    with_niceness: bool,
) -> String {
    let style = style.normalized(p.complex());
    let mut out = String::new();
    for iv in p.intervals() {
        let _ = writeln!(out, "{}", render_interval(iv, style));
    }
    if with_r_vector {
        let r: Vec<String> = p.r_vector().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "r-vector: ({})", r.join(", "));
    }
    if with_niceness {
        let nice = p.niceness(p.complex());
        let _ = writeln!(out, "nice: {}", nice.is_nice());
        for f in &nice.non_facet_uppers {
            let _ = writeln!(out, "non-facet upper: {}", render_face(f, style));
        }
        for f in &nice.unused_facets {
            let _ = writeln!(out, "unused facet: {}", render_face(f, style));
        }
    }
    out
}

#[derive(Serialize)]
struct SpaceJson<'a> {
    coeff: &'a [u32],
    vars: &'a [usize],
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    kind: &'static str,
    target: Target,
    arity: usize,
    spaces: Vec<SpaceJson<'a>>,
    sdepth: Option<usize>,
}

#[derive(Serialize)]
struct IntervalJson<'a> {
    lower: &'a [usize],
    upper: &'a [usize],
}

#[derive(Serialize)]
struct PartitionJson<'a> {
    kind: &'static str,
    arity: usize,
    intervals: Vec<IntervalJson<'a>>,
    r_vector: Vec<usize>,
    nice: bool,
}

pub fn decomposition_json(d: &StanleyDecomposition) -> String {
    let doc = DecompositionJson {
        kind: "decomposition",
        target: d.target(),
        arity: d.arity(),
        spaces: d
            .spaces()
            .iter()
            .map(|s| SpaceJson {
                coeff: s.coeff().exponents(),
                vars: s.vars().as_slice(),
            })
            .collect(),
        sdepth: d.sdepth().ok(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

pub fn partition_json(p: &Partition) -> String {
    let doc = PartitionJson {
        kind: "partition",
        arity: p.vertex_count(),
        intervals: p
            .intervals()
            .iter()
            .map(|iv| IntervalJson {
                lower: iv.lower().as_slice(),
                upper: iv.upper().as_slice(),
            })
            .collect(),
        r_vector: p.r_vector(),
        nice: p.is_nice(p.complex()),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VarSet;

    #[test]
    fn ideal_examples() {
        let i = parse_ideal("vars 3\nx1*x2, x2*x3").unwrap();
        assert_eq!(i.to_string(), "(x1*x2, x2*x3)");
        let i = parse_ideal("vars 2\nx1^2*x2").unwrap();
        assert_eq!(i.generators()[0].exponents(), &[2, 1]);
        let e = parse_ideal("vars 2\nx3").unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        assert!(e.message.contains("out of range"));
    }

    #[test]
    fn ideal_syntax_details() {
        let i =
            parse_ideal("# leading comment\n\n  vars 3  \n x1 * x2 ,\n x3^2 # trailing\n").unwrap();
        assert_eq!(i.to_string(), "(x1*x2, x3^2)");
        assert!(parse_ideal("vars 2\n1").unwrap().is_unit());
        assert!(parse_ideal("vars 2\n").unwrap().is_zero());
        // repeated factors multiply
        assert_eq!(
            parse_ideal("vars 1\nx1*x1^2").unwrap().generators()[0].exponents(),
            &[3]
        );
    }

    #[test]
    fn ideal_errors() {
        let bad = |t: &str| parse_ideal(t).unwrap_err();
        assert_eq!(bad("").message, "empty document");
        assert_eq!(bad("# only comments\n").message, "empty document");
        let e = bad("vars 2\nx1*y2");
        assert_eq!((e.line, e.column), (2, 4));
        let e = bad("vars 2\nx1^0");
        assert_eq!((e.line, e.column), (2, 4));
        assert!(bad("vars two\nx1").message.contains("non-negative"));
        assert!(bad("vars 2\nx1 x2").message.contains("expected `*`"));
        assert!(bad("vars 2\nx*x2").message.contains("index"));
        assert!(bad("vars 2\nx1^").message.contains("exponent"));
        assert!(bad("vertices 2\n{1}").message.contains("vars"));
        assert!(bad("ring 2\nx1").message.contains("unknown header"));
    }

    fn face(v: &[usize]) -> Face {
        VarSet::new(v.iter().copied())
    }

    #[test]
    fn complex_examples() {
        let d = parse_complex(
            "vertices 6\n{124},{126},{135},{134},{156},{245},{236},{235},{346},{456}",
        )
        .unwrap();
        assert_eq!(d.facets().len(), 10);
        assert!(d.facets().contains(&face(&[1, 3, 4])));

        let d = parse_complex("vertices 2\n{}").unwrap();
        assert_eq!(d, SimplicialComplex::empty_face(2));

        let d = parse_complex("vertices 10\n{1,10}").unwrap();
        assert_eq!(d.facets(), &[face(&[1, 10])]);

        assert!(parse_complex("vertices 3\n").unwrap().is_void());
    }

    #[test]
    fn complex_errors() {
        let e = parse_complex("vertices 10\n{12}").unwrap_err();
        assert!(e.message.contains("list"));
        let e = parse_complex("vertices 3\n{1,4}").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        assert!(parse_complex("vertices 3\n{1,2")
            .unwrap_err()
            .message
            .contains("unterminated"));
        assert!(parse_complex("vertices 3\n{1,,2}").is_err());
        assert!(parse_complex("vertices 3\n{10}").is_err());
        assert!(parse_complex("vertices 3\n1,2").is_err());
        assert!(parse_complex("vertices 3\n{0}").is_err());
    }

    #[test]
    fn styles() {
        let InputDocument::Complex(_, s) = parse_document("vertices 4\n{1,2},{34}").unwrap() else {
            panic!()
        };
        assert_eq!(s, FaceStyle::List);
        let InputDocument::Complex(_, s) = parse_document("vertices 4\n{12},{34}").unwrap() else {
            panic!()
        };
        assert_eq!(s, FaceStyle::Compact);
        assert_eq!(render_face(&face(&[1, 2, 4]), FaceStyle::Compact), "{124}");
        assert_eq!(render_face(&face(&[1, 10]), FaceStyle::List), "{1,10}");
        assert_eq!(render_face(&Face::empty(), FaceStyle::List), "{}");
    }

    #[test]
    fn render_round_trip_fixed_cases() {
        for text in [
            "vars 3\nx1*x2, x2*x3^2\n",
            "vars 0\n1\n",
            "vars 2\n",
            "vertices 6\n{124},{134}\n",
            "vertices 12\n{2,3},{1,11,12}\n",
            "vertices 2\n{}\n",
            "vertices 2\n",
        ] {
            let doc = parse_document(text).unwrap();
            assert_eq!(render_document(&doc), text);
            assert_eq!(parse_document(&render_document(&doc)).unwrap(), doc);
        }
    }
}
