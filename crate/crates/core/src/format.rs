//! The line-oriented algebra file format and table rendering.
//!
//! ```text
//! algebra
//! name: fig1
//! class: ncis
//! elements: a b c d 1
//! order:
//!   a < b < 1
//!   c < d < 1
//! op meet partial:
//!   a a - - a
//!   ...
//! op imp:
//!   ...
//! end
//! ```
//!
//! `#` starts a comment. Row `i`, column `j` of a binary block is
//! `op(e_i, e_j)`; `-` marks an undefined entry of a partial table. A
//! ternary block `op r:` / `op q:` holds `n` sub-blocks of `n` rows, the
//! `k`-th fixing `z = e_k`. Either `op join:` or `order:` must be present;
//! when both are, they must agree. [`serialize`] always writes the join
//! table and never an order block.

use std::fmt::Write as _;

use crate::algebra::{Algebra, ClassTag, Op, OrderRelation};
use crate::error::{Error, ParseError, Result};
use crate::order::validate_join_semilattice;
use crate::table::{BinTable, TernTable};
use crate::Elem;

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    number: usize,
    toks: Vec<Tok<'a>>,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    }
    .into())
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut toks = Vec::new();
            let mut start = None;
            for (pos, ch) in body
                .char_indices()
                .chain(std::iter::once((body.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        toks.push(Tok {
                            text: &body[s..pos],
                            line: i + 1,
                            column: body[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            Line {
                number: i + 1,
                toks,
            }
        })
        .filter(|l| !l.toks.is_empty())
        .collect()
}

fn is_keyword_line(l: &Line) -> bool {
    matches!(
        l.toks[0].text,
        "op" | "end" | "name:" | "class:" | "elements:" | "order:" | "algebra"
    )
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

#[derive(Default)]
struct Raw {
    name: Option<String>,
    class: Option<ClassTag>,
    labels: Option<Vec<String>>,
    order: Option<(usize, Vec<(Elem, Elem)>)>,
    join: Option<(usize, BinTable)>,
    meet: Option<BinTable>,
    imp: Option<BinTable>,
    prod: Option<BinTable>,
    r: Option<TernTable>,
    q: Option<TernTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next_line(&mut self) -> Result<&Line<'a>> {
        match self.lines.get(self.pos) {
            Some(_) => {
                self.pos += 1;
                Ok(&self.lines[self.pos - 1])
            }
            None => err(self.last_line + 1, 1, "unexpected end of input"),
        }
    }

    fn element(labels: &[String], t: Tok) -> Result<Elem> {
        labels.iter().position(|l| l == t.text).map_or_else(
            || err(t.line, t.column, format!("unknown element `{}`", t.text)),
            Ok,
        )
    }

    fn entry(labels: &[String], t: Tok, partial: bool) -> Result<Option<Elem>> {
        if t.text == "-" {
            if partial {
                Ok(None)
            } else {
                err(t.line, t.column, "`-` in a total table")
            }
        } else {
            Self::element(labels, t).map(Some)
        }
    }

    fn row(&mut self, labels: &[String], partial: bool) -> Result<Vec<Option<Elem>>> {
        let n = labels.len();
        let line = self.next_line()?;
        if is_keyword_line(line) && !labels.iter().any(|l| l == line.toks[0].text) {
            let t = line.toks[0];
            return err(
                t.line,
                t.column,
                format!("expected a table row, found `{}`", t.text),
            );
        }
        if line.toks.len() != n {
            let t = line
                .toks
                .get(n)
                .copied()
                .unwrap_or(line.toks[line.toks.len() - 1]);
            return err(
                t.line,
                t.column,
                format!("expected {n} entries, found {}", line.toks.len()),
            );
        }
        let toks = line.toks.clone();
        toks.into_iter()
            .map(|t| Self::entry(labels, t, partial))
            .collect()
    }

    fn binary(&mut self, labels: &[String], partial: bool) -> Result<BinTable> {
        let rows = (0..labels.len())
            .map(|_| self.row(labels, partial))
            .collect::<Result<Vec<_>>>()?;
        Ok(BinTable::from_rows(rows))
    }

    fn ternary(&mut self, labels: &[String]) -> Result<TernTable> {
        let n = labels.len();
        let mut t = TernTable::from_fn(n, |_, _, _| 0);
        for z in 0..n {
            for x in 0..n {
                let row = self.row(labels, false)?;
                for (y, v) in row.into_iter().enumerate() {
                    t.set(x, y, z, v.expect("total row"));
                }
            }
        }
        Ok(t)
    }

    fn order(&mut self, labels: &[String]) -> Result<Vec<(Elem, Elem)>> {
        let mut pairs = Vec::new();
        while let Some(line) = self.peek() {
            if line.toks.get(1).is_none_or(|t| t.text != "<") {
                break;
            }
            let toks = line.toks.clone();
            self.pos += 1;
            if toks.len() < 3 || toks.len() % 2 == 0 {
                return err(toks[0].line, toks[0].column, "expected `x < y`");
            }
            let mut prev = Self::element(labels, toks[0])?;
            for pair in toks[1..].chunks(2) {
                if pair[0].text != "<" {
                    return err(pair[0].line, pair[0].column, "expected `<`");
                }
                let next = Self::element(labels, pair[1])?;
                pairs.push((prev, next));
                prev = next;
            }
        }
        Ok(pairs)
    }

    fn parse(&mut self) -> Result<Raw> {
        let first = self.next_line()?;
        if first.toks[0].text != "algebra" || first.toks.len() != 1 {
            let t = first.toks[0];
            return err(t.line, t.column, "expected `algebra`");
        }
        let mut raw = Raw::default();
        loop {
            let line = self.next_line()?;
            let number = line.number;
            let toks = line.toks.clone();
            let head = toks[0];
            let single = |what: &str| -> Result<Tok> {
                match toks.len() {
                    2 => Ok(toks[1]),
                    1 => err(
                        head.line,
                        head.column + head.text.len(),
                        format!("missing {what}"),
                    ),
                    _ => err(toks[2].line, toks[2].column, "unexpected token"),
                }
            };
            match head.text {
                "end" => {
                    if toks.len() > 1 {
                        return err(toks[1].line, toks[1].column, "unexpected token after `end`");
                    }
                    if let Some(extra) = self.peek() {
                        let t = extra.toks[0];
                        return err(t.line, t.column, "content after `end`");
                    }
                    break;
                }
                "name:" => raw.name = Some(single("name")?.text.to_string()),
                "class:" => {
                    let t = single("class")?;
                    raw.class = Some(
                        t.text
                            .parse()
                            .or_else(|m: String| err(t.line, t.column, m))?,
                    );
                }
                "elements:" => {
                    if raw.labels.is_some() {
                        return err(head.line, head.column, "duplicate `elements:` line");
                    }
                    if toks.len() == 1 {
                        return err(head.line, head.column, "no elements");
                    }
                    let mut labels: Vec<String> = Vec::new();
                    for t in &toks[1..] {
                        if labels.iter().any(|l| l == t.text) {
                            return err(t.line, t.column, format!("duplicate label `{}`", t.text));
                        }
                        if t.text == "-" || t.text == "<" {
                            return err(t.line, t.column, format!("reserved label `{}`", t.text));
                        }
                        labels.push(t.text.to_string());
                    }
                    raw.labels = Some(labels);
                }
                "order:" | "op" => {
                    let Some(labels) = raw.labels.clone() else {
                        return err(head.line, head.column, "`elements:` must come first");
                    };
                    if head.text == "order:" {
                        if toks.len() > 1 {
                            return err(toks[1].line, toks[1].column, "unexpected token");
                        }
                        if raw.order.is_some() {
                            return err(head.line, head.column, "duplicate order block");
                        }
                        raw.order = Some((number, self.order(&labels)?));
                        continue;
                    }
                    let header: Vec<&str> = toks[1..].iter().map(|t| t.text).collect();
                    let (op, partial) = match header.as_slice() {
                        ["join:"] => (Op::Join, false),
                        ["meet", "partial:"] => (Op::Meet, true),
                        ["imp:"] => (Op::Imp, false),
                        ["prod", "partial:"] => (Op::Prod, true),
                        ["r:"] => (Op::R, false),
                        ["q:"] => (Op::Q, false),
                        _ => {
                            let t = toks.get(1).copied().unwrap_or(head);
                            return err(t.line, t.column, "unknown operation header");
                        }
                    };
                    let taken = match op {
                        Op::Join => raw.join.is_some(),
                        Op::Meet => raw.meet.is_some(),
                        Op::Imp => raw.imp.is_some(),
                        Op::Prod => raw.prod.is_some(),
                        Op::R => raw.r.is_some(),
                        Op::Q => raw.q.is_some(),
                    };
                    if taken {
                        return err(
                            head.line,
                            head.column,
                            format!("duplicate {} table", op.name()),
                        );
                    }
                    match op {
                        Op::Join => raw.join = Some((number, self.binary(&labels, false)?)),
                        Op::Meet => raw.meet = Some(self.binary(&labels, partial)?),
                        Op::Imp => raw.imp = Some(self.binary(&labels, partial)?),
                        Op::Prod => raw.prod = Some(self.binary(&labels, partial)?),
                        Op::R => raw.r = Some(self.ternary(&labels)?),
                        Op::Q => raw.q = Some(self.ternary(&labels)?),
                    }
                }
                other => return err(head.line, head.column, format!("unexpected `{other}`")),
            }
        }
        Ok(raw)
    }
}

/// Reads an algebra file. Syntax errors carry a line and column; structural
/// problems (not a join-semilattice, meet domain mismatch, ...) are
/// reported as [`Error::Structure`].
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    build(read_raw(text)?, false)
}

/// Like [`parse_algebra`], but a join table that breaks the semilattice
/// laws is accepted as is, so a validator can report the failing law. The
/// remaining tables are dropped in that case.
pub fn parse_algebra_lenient(text: &str) -> Result<Algebra> {
    build(read_raw(text)?, true)
}

fn read_raw(text: &str) -> Result<Raw> {
    let lines = tokenize(text);
    if lines.is_empty() {
        return err(1, 1, "empty input");
    }
    let last_line = lines.last().map_or(0, |l| l.number);
    let mut p = Parser {
        lines,
        pos: 0,
        last_line,
    };
    let raw = p.parse()?;
    if raw.labels.is_none() {
        return err(last_line, 1, "missing `elements:` line");
    }
    Ok(raw)
}

fn build(raw: Raw, lenient: bool) -> Result<Algebra> {
    let labels = raw.labels.expect("checked by read_raw");
    let n = labels.len();
    let mut alg = match (raw.join, raw.order) {
        (Some((_, join)), order) => {
            if lenient {
                let alg = Algebra::from_join_unchecked(labels.clone(), join.clone())?;
                if !validate_join_semilattice(&alg).is_pass() {
                    return Ok(alg);
                }
            }
            let alg = Algebra::from_join(labels, join)?;
            if let Some((line, pairs)) = order {
                let given = OrderRelation::closure_of(n, &pairs);
                if &given != alg.order() {
                    return Err(Error::Structure(format!(
                        "order block at line {line} disagrees with the join table"
                    )));
                }
            }
            alg
        }
        (None, Some((_, pairs))) => Algebra::from_order(labels, &pairs)?,
        (None, None) => {
            return Err(Error::Structure(
                "need a join table or an order block".into(),
            ));
        }
    };
    if let Some(t) = raw.meet {
        alg = alg.with_meet(t)?;
    }
    if let Some(t) = raw.imp {
        alg = alg.with_imp(t)?;
    }
    if let Some(t) = raw.prod {
        alg = alg.with_prod(t)?;
    }
    if let Some(t) = raw.r {
        alg = alg.with_r(t)?;
    }
    if let Some(t) = raw.q {
        alg = alg.with_q(t)?;
    }
    if let Some(name) = raw.name {
        alg = alg.with_name(name);
    }
    if let Some(class) = raw.class {
        alg = alg.with_class(class);
    }
    Ok(alg)
}

fn cell(alg: &Algebra, v: Option<Elem>) -> &str {
    v.map_or("-", |e| alg.label(e))
}

/// Writes the canonical text form: single spaces, rows indented by two
/// spaces, tables in the order join, meet, imp, prod, r, q.
pub fn serialize(alg: &Algebra) -> String {
    let mut out = String::from("algebra\n");
    if let Some(name) = alg.name() {
        writeln!(out, "name: {name}").unwrap();
    }
    if let Some(class) = alg.class() {
        writeln!(out, "class: {class}").unwrap();
    }
    writeln!(out, "elements: {}", alg.universe().labels().join(" ")).unwrap();
    let n = alg.size();
    for (op, header) in [
        (Op::Join, "op join:"),
        (Op::Meet, "op meet partial:"),
        (Op::Imp, "op imp:"),
        (Op::Prod, "op prod partial:"),
    ] {
        if let Some(t) = alg.binary(op) {
            writeln!(out, "{header}").unwrap();
            for x in 0..n {
                let row: Vec<&str> = (0..n).map(|y| cell(alg, t.get(x, y))).collect();
                writeln!(out, "  {}", row.join(" ")).unwrap();
            }
        }
    }
    for op in [Op::R, Op::Q] {
        if let Some(t) = alg.ternary(op) {
            writeln!(out, "op {}:", op.name()).unwrap();
            for z in 0..n {
                if z > 0 {
                    out.push('\n');
                }
                for x in 0..n {
                    let row: Vec<&str> = (0..n).map(|y| alg.label(t.at(x, y, z))).collect();
                    writeln!(out, "  {}", row.join(" ")).unwrap();
                }
            }
        }
    }
    out.push_str("end\n");
    out
}

/// Renders one binary table with a header row and column of labels,
/// `-` for undefined entries and every cell padded to the longest label.
pub fn render_table(alg: &Algebra, op: Op) -> Option<String> {
    let t = alg.binary(op)?;
    let labels = alg.universe().labels();
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let w0 = w.max(op.name().len());
    let pad = |s: &str, width: usize| format!("{s:<width$}");
    let line = |head: &str, cells: Vec<String>| {
        let s = format!("{} | {}", pad(head, w0), cells.join(" "));
        s.trim_end().to_string()
    };
    let mut out = Vec::new();
    out.push(line(op.name(), labels.iter().map(|l| pad(l, w)).collect()));
    let body_width = labels.len() * (w + 1) - 1;
    out.push(format!(
        "{}+{}",
        "-".repeat(w0 + 1),
        "-".repeat(body_width + 1)
    ));
    for x in alg.elements() {
        let cells = alg
            .elements()
            .map(|y| pad(cell(alg, t.get(x, y)), w))
            .collect();
        out.push(line(alg.label(x), cells));
    }
    Some(out.join("\n") + "\n")
}

/// All binary tables present on `alg`, separated by blank lines.
pub fn render_tables(alg: &Algebra) -> String {
    [Op::Join, Op::Meet, Op::Imp, Op::Prod]
        .into_iter()
        .filter_map(|op| render_table(alg, op))
        .collect::<Vec<_>>()
        .join("\n")
}
