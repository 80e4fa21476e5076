//! Line-oriented text format.
//!
//! A document starts with the header `hdgroups <version> <kind>`, followed
//! by sections. A section is a keyword line (a keyword, then optional
//! decimal arguments) and zero or more rows of decimal integers. Tokens are
//! separated by single spaces and every line ends in LF. The parser rejects
//! anything else, so `emit(parse(text)) == text` for every accepted text.

use std::fmt::Write as _;
use std::sync::Arc;

use hdgroups::cat1::Cat1Group;
use hdgroups::cat2::Cat2Group;
use hdgroups::group::Realization;
use hdgroups::xsq::CrossedSquare;
use hdgroups::{semidirect_product, Elem, GroupAction, GroupTable, Homomorphism};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("format version {found} is not supported (expected {expected})")]
    Version { found: u32, expected: u32 },
    #[error("expected a `{expected}` document, found `{found}`")]
    Kind { expected: String, found: String },
    #[error("missing section `{0}`")]
    Missing(String),
    #[error("section `{keyword}`: {message}")]
    Invalid { keyword: String, message: String },
    #[error("unexpected trailing section `{0}`")]
    Trailing(String),
    #[error(transparent)]
    Group(#[from] hdgroups::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub keyword: String,
    pub args: Vec<u64>,
    pub rows: Vec<Vec<u32>>,
}

impl Section {
    pub fn new(keyword: &str) -> Self {
        Section { keyword: keyword.to_string(), args: Vec::new(), rows: Vec::new() }
    }

    pub fn with_args(mut self, args: impl IntoIterator<Item = u64>) -> Self {
        self.args.extend(args);
        self
    }

    pub fn with_rows(mut self, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        self.rows.extend(rows);
        self
    }

    fn invalid(&self, message: impl Into<String>) -> FormatError {
        FormatError::Invalid { keyword: self.keyword.clone(), message: message.into() }
    }

    /// The single row of a one-row section.
    pub fn single_row(&self) -> Result<&[u32]> {
        match self.rows.as_slice() {
            [row] => Ok(row),
            rows => Err(self.invalid(format!("expected one row, found {}", rows.len()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub version: u32,
    pub kind: String,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn new(kind: &str) -> Self {
        Document { version: FORMAT_VERSION, kind: kind.to_string(), sections: Vec::new() }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        writeln!(out, "hdgroups {} {}", self.version, self.kind).unwrap();
        for s in &self.sections {
            out.push_str(&s.keyword);
            for a in &s.args {
                write!(out, " {a}").unwrap();
            }
            out.push('\n');
            for row in &s.rows {
                let mut first = true;
                for x in row {
                    if !first {
                        out.push(' ');
                    }
                    write!(out, "{x}").unwrap();
                    first = false;
                }
                out.push('\n');
            }
        }
        out
    }

    /// Parses any version; callers decide whether the version is usable.
    pub fn parse(text: &str) -> Result<Self> {
        if !text.ends_with('\n') {
            return Err(FormatError::Syntax {
                line: text.lines().count().max(1),
                message: "missing final newline".into(),
            });
        }
        let mut lines = text[..text.len() - 1].split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().expect("split yields a line");
        let head = tokens(1, header)?;
        let (version, kind) = match head.as_slice() {
            ["hdgroups", v, k] if is_word(k) => (number(1, v)? as u32, k.to_string()),
            _ => return Err(FormatError::Syntax { line: 1, message: "expected `hdgroups <version> <kind>`".into() }),
        };
        let mut sections: Vec<Section> = Vec::new();
        for (line, text) in lines {
            let words = tokens(line, text)?;
            if is_word(words[0]) {
                let args = words[1..].iter().map(|t| number(line, t)).collect::<Result<Vec<u64>>>()?;
                sections.push(Section { keyword: words[0].to_string(), args, rows: Vec::new() });
            } else {
                let row = words
                    .iter()
                    .map(|t| u32::try_from(number(line, t)?).map_err(|_| syntax(line, "entry exceeds 32 bits")))
                    .collect::<Result<Vec<u32>>>()?;
                let section = sections.last_mut().ok_or_else(|| syntax(line, "row before the first section"))?;
                section.rows.push(row);
            }
        }
        Ok(Document { version, kind, sections })
    }

    /// Parses and requires the current version and the given kind.
    pub fn parse_kind(text: &str, kind: &str) -> Result<Self> {
        let doc = Self::parse(text)?;
        doc.require(kind)?;
        Ok(doc)
    }

    pub fn require(&self, kind: &str) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(FormatError::Version { found: self.version, expected: FORMAT_VERSION });
        }
        if self.kind != kind {
            return Err(FormatError::Kind { expected: kind.to_string(), found: self.kind.clone() });
        }
        Ok(())
    }

    pub fn reader(&self) -> Reader<'_> {
        Reader { sections: &self.sections, next: 0 }
    }
}

fn syntax(line: usize, message: &str) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn tokens(line: usize, text: &str) -> Result<Vec<&str>> {
    if text.is_empty() {
        return Err(syntax(line, "empty line"));
    }
    let tokens: Vec<&str> = text.split(' ').collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(syntax(line, "tokens must be separated by single spaces"));
    }
    Ok(tokens)
}

fn is_word(token: &str) -> bool {
    let mut chars = token.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

fn number(line: usize, token: &str) -> Result<u64> {
    let canonical = token == "0" || (!token.starts_with('0') && token.bytes().all(|b| b.is_ascii_digit()));
    if !canonical {
        return Err(FormatError::Syntax { line, message: format!("`{token}` is not a canonical decimal") });
    }
    token.parse().map_err(|_| FormatError::Syntax { line, message: format!("`{token}` is out of range") })
}

/// Sequential access to the sections of a document.
pub struct Reader<'a> {
    sections: &'a [Section],
    next: usize,
}

impl<'a> Reader<'a> {
    pub fn peek(&self) -> Option<&'a Section> {
        self.sections.get(self.next)
    }

    pub fn expect(&mut self, keyword: &str) -> Result<&'a Section> {
        match self.sections.get(self.next) {
            Some(s) if s.keyword == keyword => {
                self.next += 1;
                Ok(s)
            }
            _ => Err(FormatError::Missing(keyword.to_string())),
        }
    }

    pub fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(s) => Err(FormatError::Trailing(s.keyword.clone())),
        }
    }
}

fn arg_usize(s: &Section, k: usize) -> Result<usize> {
    s.args.get(k).map(|&a| a as usize).ok_or_else(|| s.invalid(format!("argument {} missing", k + 1)))
}

/// Writes a dense group as `group`, `generators`, `table`, and a
/// structural semidirect product as `semidirect` followed by its two
/// factors and the `action` rows.
pub fn write_group(doc: &mut Document, g: &GroupTable) {
    match g.realization() {
        Realization::Dense(table) => {
            let n = g.order();
            doc.push(Section::new("group").with_args([n as u64]));
            doc.push(Section::new("generators").with_args(g.generators().iter().map(|&x| x as u64)));
            doc.push(Section::new("table").with_rows(table.chunks(n).map(|r| r.to_vec())));
        }
        Realization::Structural(layout) => {
            doc.push(Section::new("semidirect").with_args([g.order() as u64]));
            write_group(doc, &layout.normal);
            write_group(doc, &layout.complement);
            let ns = layout.normal.order();
            doc.push(Section::new("action").with_rows(layout.action.chunks(ns).map(|r| r.to_vec())));
        }
    }
}

pub fn read_group(r: &mut Reader<'_>) -> Result<Arc<GroupTable>> {
    match r.peek().map(|s| s.keyword.as_str()) {
        Some("semidirect") => {
            let head = r.expect("semidirect")?;
            let order = arg_usize(head, 0)?;
            let normal = read_group(r)?;
            let complement = read_group(r)?;
            let action = r.expect("action")?;
            let table: Vec<Elem> = action.rows.concat();
            if action.rows.len() != complement.order() || table.len() != complement.order() * normal.order() {
                return Err(action.invalid("expected one row of |N| entries per complement element"));
            }
            let act = GroupAction::new(&complement, &normal, table)?;
            let sd = semidirect_product(&normal, &complement, &act)?;
            if sd.group.order() != order {
                return Err(head.invalid(format!("factors give order {}, not {order}", sd.group.order())));
            }
            Ok(sd.group)
        }
        _ => {
            let head = r.expect("group")?;
            let order = arg_usize(head, 0)?;
            let gens: Vec<Elem> = r.expect("generators")?.args.iter().map(|&a| a as Elem).collect();
            let table = r.expect("table")?;
            if table.rows.len() != order || table.rows.iter().any(|row| row.len() != order) {
                return Err(table.invalid(format!("expected {order} rows of {order} entries")));
            }
            Ok(Arc::new(GroupTable::from_table(table.rows.concat(), gens, "")?))
        }
    }
}

fn map_section(keyword: &str, f: &Homomorphism) -> Section {
    Section::new(keyword).with_rows([f.map().to_vec()])
}

pub fn read_map(
    r: &mut Reader<'_>,
    keyword: &str,
    source: &Arc<GroupTable>,
    target: &Arc<GroupTable>,
) -> Result<Homomorphism> {
    let s = r.expect(keyword)?;
    let row = s.single_row()?;
    Homomorphism::new(source, target, row.to_vec()).map_err(|e| s.invalid(e.to_string()))
}

fn action_section(keyword: &str, a: &GroupAction) -> Section {
    Section::new(keyword).with_rows(a.table().chunks(a.space().order()).map(|r| r.to_vec()))
}

fn read_action(
    r: &mut Reader<'_>,
    keyword: &str,
    actor: &Arc<GroupTable>,
    space: &Arc<GroupTable>,
) -> Result<GroupAction> {
    let s = r.expect(keyword)?;
    if s.rows.len() != actor.order() {
        return Err(s.invalid(format!("expected {} rows", actor.order())));
    }
    GroupAction::new(actor, space, s.rows.concat()).map_err(|e| s.invalid(e.to_string()))
}

fn size_section(size: &[usize]) -> Section {
    Section::new("size").with_args(size.iter().map(|&x| x as u64))
}

pub fn cat1_document(c: &Cat1Group) -> Document {
    let mut doc = Document::new("cat1");
    write_group(&mut doc, c.group());
    doc.push(map_section("tail", c.tail()));
    doc.push(map_section("head", c.head()));
    doc.push(size_section(&c.size()));
    doc
}

/// The group and the two maps of a `cat1` document, unvalidated beyond
/// being homomorphisms.
pub fn read_cat1_parts(doc: &Document) -> Result<(Arc<GroupTable>, Homomorphism, Homomorphism)> {
    doc.require("cat1")?;
    let mut r = doc.reader();
    let g = read_group(&mut r)?;
    let t = read_map(&mut r, "tail", &g, &g)?;
    let h = read_map(&mut r, "head", &g, &g)?;
    r.expect("size")?;
    r.finish()?;
    Ok((g, t, h))
}

/// The `size` section is the last one of every structure document.
fn recorded_size_matches(doc: &Document, size: &[usize]) -> Result<()> {
    let s = doc.sections.last().ok_or_else(|| FormatError::Missing("size".into()))?;
    if s.args.iter().map(|&a| a as usize).ne(size.iter().copied()) {
        return Err(s.invalid(format!("recorded size does not match the structure {size:?}")));
    }
    Ok(())
}

pub fn read_cat1(doc: &Document) -> Result<Cat1Group> {
    let (_, t, h) = read_cat1_parts(doc)?;
    let c = Cat1Group::new(&t, &h)?;
    recorded_size_matches(doc, &c.size())?;
    Ok(c)
}

pub fn cat2_document(c: &Cat2Group) -> Document {
    let mut doc = Document::new("cat2");
    write_group(&mut doc, c.group());
    doc.push(map_section("tail1", c.first().tail()));
    doc.push(map_section("head1", c.first().head()));
    doc.push(map_section("tail2", c.second().tail()));
    doc.push(map_section("head2", c.second().head()));
    doc.push(size_section(&c.size()));
    doc
}

/// The group and the maps `t₁, h₁, t₂, h₂` of a `cat2` document.
pub fn read_cat2_parts(doc: &Document) -> Result<(Arc<GroupTable>, [Homomorphism; 4])> {
    doc.require("cat2")?;
    let mut r = doc.reader();
    let g = read_group(&mut r)?;
    let maps = [
        read_map(&mut r, "tail1", &g, &g)?,
        read_map(&mut r, "head1", &g, &g)?,
        read_map(&mut r, "tail2", &g, &g)?,
        read_map(&mut r, "head2", &g, &g)?,
    ];
    r.expect("size")?;
    r.finish()?;
    Ok((g, maps))
}

pub fn read_cat2(doc: &Document) -> Result<Cat2Group> {
    let (_, [t1, h1, t2, h2]) = read_cat2_parts(doc)?;
    let c = hdgroups::cat2::cat2_group(&Cat1Group::new(&t1, &h1)?, &Cat1Group::new(&t2, &h2)?)?;
    recorded_size_matches(doc, &c.size())?;
    Ok(c)
}

/// Corners in the order `L, M, N, P`, then `kappa`, `lambda`, `mu`, `nu`,
/// the actions of `P` on `L`, `M`, `N`, and the pairing with one row per
/// element of `M`.
pub fn xsq_document(x: &CrossedSquare) -> Document {
    let mut doc = Document::new("xsq");
    for g in [x.l(), x.m(), x.n(), x.p()] {
        write_group(&mut doc, g);
    }
    doc.push(map_section("kappa", x.kappa()));
    doc.push(map_section("lambda", x.lambda()));
    doc.push(map_section("mu", x.mu()));
    doc.push(map_section("nu", x.nu()));
    doc.push(action_section("act_l", x.action_on_l()));
    doc.push(action_section("act_m", x.action_on_m()));
    doc.push(action_section("act_n", x.action_on_n()));
    doc.push(Section::new("pairing").with_rows(x.pairing().chunks(x.n().order()).map(|r| r.to_vec())));
    doc.push(size_section(&x.size()));
    doc
}

/// A crossed-square candidate: well-formed data, axioms not checked.
pub fn read_xsq_candidate(doc: &Document) -> Result<CrossedSquare> {
    doc.require("xsq")?;
    let mut r = doc.reader();
    let l = read_group(&mut r)?;
    let m = read_group(&mut r)?;
    let n = read_group(&mut r)?;
    let p = read_group(&mut r)?;
    let kappa = read_map(&mut r, "kappa", &l, &m)?;
    let lambda = read_map(&mut r, "lambda", &l, &n)?;
    let mu = read_map(&mut r, "mu", &m, &p)?;
    let nu = read_map(&mut r, "nu", &n, &p)?;
    let act_l = read_action(&mut r, "act_l", &p, &l)?;
    let act_m = read_action(&mut r, "act_m", &p, &m)?;
    let act_n = read_action(&mut r, "act_n", &p, &n)?;
    let pairing = r.expect("pairing")?;
    if pairing.rows.len() != m.order() {
        return Err(pairing.invalid(format!("expected {} rows", m.order())));
    }
    let x = CrossedSquare::candidate(kappa, lambda, mu, nu, act_l, act_m, act_n, pairing.rows.concat())?;
    r.expect("size")?;
    r.finish()?;
    recorded_size_matches(doc, &x.size())?;
    Ok(x)
}

pub fn read_xsq(doc: &Document) -> Result<CrossedSquare> {
    let x = read_xsq_candidate(doc)?;
    let report = hdgroups::xsq::is_crossed_square(&x);
    if report.is_valid() {
        Ok(x)
    } else {
        Err(hdgroups::Error::Axioms(report).into())
    }
}
