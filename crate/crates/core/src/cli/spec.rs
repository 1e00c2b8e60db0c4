//! The line-oriented spec format.
//!
//! ```text
//! # comments run to the end of the line
//! category C
//!   objects 0 1 2
//!   arrow id_0 : 0 -> 0
//!   identity 0 = id_0
//!   compose g . f = h
//! end
//! functor F : C -> D
//!   obj x = y
//!   mor f = g
//! end
//! het H : C ~> D
//!   element u : x ~> a
//!   lact k u = v
//!   ract u h = v
//! end
//! ```
//!
//! Category blocks accept one sugar line instead of explicit content:
//! `poset-chain n`, `poset-powerset k`, `discrete a b …` or `product C D`.
//! Het blocks accept `rel x a` (the singleton het `u_x_a`), or a single sugar
//! line `hom`, `induced-left F` or `induced-right G`. Table entries that are
//! forced (composites with identities, anything landing in a singleton set)
//! may be omitted and are filled in on load; [`serialize`] omits them.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{CategoryBuilder, FinCategory};
use crate::functor::{
    hom_bifunctor, induced_het_left, induced_het_right, FinFunctor, FunctorBuilder,
};
use crate::het::{HetBifunctor, HetBuilder};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Category {
        name: String,
        category: Arc<FinCategory>,
    },
    Functor {
        name: String,
        source: String,
        target: String,
        functor: FinFunctor,
    },
    Het {
        name: String,
        sending: String,
        receiving: String,
        het: Arc<HetBifunctor>,
    },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Category { name, .. } | Item::Functor { name, .. } | Item::Het { name, .. } => {
                name
            }
        }
    }
}

/// Named categories, functors and het bifunctors, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecDocument {
    items: Vec<Item>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("line {line}, column {column}: {message}{}", expected_suffix(.expected))]
    Syntax {
        line: usize,
        column: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("line {line}, column {column}: undeclared {kind} `{name}`")]
    Undeclared {
        line: usize,
        column: usize,
        kind: &'static str,
        name: String,
    },
    #[error("line {line}: duplicate declaration `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: {kind} `{name}` is invalid\n{report}")]
    Invalid {
        line: usize,
        kind: &'static str,
        name: String,
        report: ValidationReport,
    },
    #[error("{0}")]
    Mismatch(String),
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(" or "))
    }
}

impl SpecDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    fn has_name(&self, name: &str) -> bool {
        self.items.iter().any(|i| i.name() == name)
    }

    pub fn category(&self, name: &str) -> Option<&Arc<FinCategory>> {
        self.items.iter().find_map(|i| match i {
            Item::Category { name: n, category } if n == name => Some(category),
            _ => None,
        })
    }

    pub fn functor(&self, name: &str) -> Option<&FinFunctor> {
        self.items.iter().find_map(|i| match i {
            Item::Functor {
                name: n, functor, ..
            } if n == name => Some(functor),
            _ => None,
        })
    }

    pub fn het(&self, name: &str) -> Option<&Arc<HetBifunctor>> {
        self.items.iter().find_map(|i| match i {
            Item::Het { name: n, het, .. } if n == name => Some(het),
            _ => None,
        })
    }

    pub fn add_category(
        &mut self,
        name: &str,
        category: Arc<FinCategory>,
    ) -> Result<(), SpecError> {
        if self.has_name(name) {
            return Err(SpecError::Mismatch(format!(
                "duplicate declaration `{name}`"
            )));
        }
        self.items.push(Item::Category {
            name: name.to_string(),
            category,
        });
        Ok(())
    }

    pub fn add_functor(
        &mut self,
        name: &str,
        source: &str,
        target: &str,
        functor: FinFunctor,
    ) -> Result<(), SpecError> {
        if self.has_name(name) {
            return Err(SpecError::Mismatch(format!(
                "duplicate declaration `{name}`"
            )));
        }
        if self.category(source) != Some(functor.source())
            || self.category(target) != Some(functor.target())
        {
            return Err(SpecError::Mismatch(format!(
                "functor `{name}` does not run from `{source}` to `{target}`"
            )));
        }
        self.items.push(Item::Functor {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            functor,
        });
        Ok(())
    }

    pub fn add_het(
        &mut self,
        name: &str,
        sending: &str,
        receiving: &str,
        het: Arc<HetBifunctor>,
    ) -> Result<(), SpecError> {
        if self.has_name(name) {
            return Err(SpecError::Mismatch(format!(
                "duplicate declaration `{name}`"
            )));
        }
        if self.category(sending) != Some(het.sending())
            || self.category(receiving) != Some(het.receiving())
        {
            return Err(SpecError::Mismatch(format!(
                "het `{name}` does not run from `{sending}` to `{receiving}`"
            )));
        }
        self.items.push(Item::Het {
            name: name.to_string(),
            sending: sending.to_string(),
            receiving: receiving.to_string(),
            het,
        });
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut toks = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                toks.push(Tok {
                    text: &line[s..i],
                    col: s + 1,
                });
            }
        } else if start.is_none() {
            if c == '#' {
                return toks;
            }
            start = Some(i);
        }
    }
    if let Some(s) = start {
        toks.push(Tok {
            text: &line[s..],
            col: s + 1,
        });
    }
    toks
}

const RESERVED: [&str; 5] = [":", "->", "~>", ".", "="];

struct Cursor<'a> {
    line: usize,
    toks: Vec<Tok<'a>>,
    pos: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        Cursor {
            line,
            toks: tokenize(text),
            pos: 0,
            end_col: text.chars().count() + 1,
        }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn syntax(&self, message: &str, expected: &[&str]) -> SpecError {
        SpecError::Syntax {
            line: self.line,
            column: self.col(),
            message: message.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn name(&mut self, what: &str) -> Result<Tok<'a>, SpecError> {
        match self.toks.get(self.pos) {
            Some(t) if !RESERVED.contains(&t.text) => {
                self.pos += 1;
                Ok(*t)
            }
            _ => Err(self.syntax(&format!("missing {what}"), &[what])),
        }
    }

    fn punct(&mut self, p: &str) -> Result<(), SpecError> {
        match self.toks.get(self.pos) {
            Some(t) if t.text == p => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax("unexpected token", &[&format!("`{p}`")])),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, SpecError> {
        let col = self.col();
        let t = self.name(what)?;
        t.text.parse().map_err(|_| SpecError::Syntax {
            line: self.line,
            column: col,
            message: format!("`{}` is not a number", t.text),
            expected: vec![what.to_string()],
        })
    }

    fn rest(&mut self) -> Vec<Tok<'a>> {
        let rest = self.toks[self.pos..].to_vec();
        self.pos = self.toks.len();
        rest
    }

    fn finish(&self) -> Result<(), SpecError> {
        if self.pos < self.toks.len() {
            Err(self.syntax("trailing tokens", &["end of line"]))
        } else {
            Ok(())
        }
    }
}

fn undeclared(line: usize, tok: Tok<'_>, kind: &'static str) -> SpecError {
    SpecError::Undeclared {
        line,
        column: tok.col,
        kind,
        name: tok.text.to_string(),
    }
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let mut doc = SpecDocument::new();
    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let mut cur = Cursor::new(i + 1, lines[i]);
        i += 1;
        if cur.toks.is_empty() {
            continue;
        }
        let header_line = cur.line;
        let keyword = cur.name("block keyword")?;
        // body lines up to the matching `end`
        let mut body = Vec::new();
        let mut closed = false;
        while i < lines.len() {
            let c = Cursor::new(i + 1, lines[i]);
            i += 1;
            if c.toks.is_empty() {
                continue;
            }
            if c.toks[0].text == "end" {
                c.toks
                    .len()
                    .eq(&1)
                    .then_some(())
                    .ok_or_else(|| SpecError::Syntax {
                        line: c.line,
                        column: c.toks[1].col,
                        message: "trailing tokens".into(),
                        expected: vec!["end of line".into()],
                    })?;
                closed = true;
                break;
            }
            body.push(c);
        }
        if !closed {
            return Err(SpecError::Syntax {
                line: lines.len(),
                column: 1,
                message: format!("block opened on line {header_line} is not closed"),
                expected: vec!["`end`".into()],
            });
        }
        match keyword.text {
            "category" => {
                let name = cur.name("category name")?;
                cur.finish()?;
                check_fresh(&doc, header_line, name)?;
                let cat = parse_category(&doc, header_line, name.text, body)?;
                doc.add_category(name.text, Arc::new(cat))?;
            }
            "functor" => {
                let name = cur.name("functor name")?;
                cur.punct(":")?;
                let src = cur.name("source category")?;
                cur.punct("->")?;
                let tgt = cur.name("target category")?;
                cur.finish()?;
                check_fresh(&doc, header_line, name)?;
                let source = doc
                    .category(src.text)
                    .ok_or_else(|| undeclared(header_line, src, "category"))?
                    .clone();
                let target = doc
                    .category(tgt.text)
                    .ok_or_else(|| undeclared(header_line, tgt, "category"))?
                    .clone();
                let functor = parse_functor(header_line, name.text, source, target, body)?;
                doc.add_functor(name.text, src.text, tgt.text, functor)?;
            }
            "het" => {
                let name = cur.name("het name")?;
                cur.punct(":")?;
                let src = cur.name("sending category")?;
                cur.punct("~>")?;
                let tgt = cur.name("receiving category")?;
                cur.finish()?;
                check_fresh(&doc, header_line, name)?;
                let sending = doc
                    .category(src.text)
                    .ok_or_else(|| undeclared(header_line, src, "category"))?
                    .clone();
                let receiving = doc
                    .category(tgt.text)
                    .ok_or_else(|| undeclared(header_line, tgt, "category"))?
                    .clone();
                let het = parse_het(&doc, header_line, name.text, sending, receiving, body)?;
                doc.add_het(name.text, src.text, tgt.text, Arc::new(het))?;
            }
            _ => {
                return Err(SpecError::Syntax {
                    line: header_line,
                    column: keyword.col,
                    message: format!("unknown block `{}`", keyword.text),
                    expected: vec!["`category`".into(), "`functor`".into(), "`het`".into()],
                })
            }
        }
    }
    Ok(doc)
}

fn check_fresh(doc: &SpecDocument, line: usize, name: Tok<'_>) -> Result<(), SpecError> {
    if doc.has_name(name.text) {
        Err(SpecError::Duplicate {
            line,
            name: name.text.to_string(),
        })
    } else {
        Ok(())
    }
}

fn only_statement(body: &[Cursor<'_>], keyword: &str) -> Result<(), SpecError> {
    if body.len() > 1 {
        let other = body
            .iter()
            .find(|c| c.toks[0].text != keyword)
            .unwrap_or(&body[1]);
        return Err(SpecError::Syntax {
            line: other.line,
            column: other.toks[0].col,
            message: format!("`{keyword}` must be the only statement in its block"),
            expected: vec!["`end`".into()],
        });
    }
    Ok(())
}

fn invalid(line: usize, kind: &'static str, name: &str, report: ValidationReport) -> SpecError {
    SpecError::Invalid {
        line,
        kind,
        name: name.to_string(),
        report,
    }
}

fn parse_category(
    doc: &SpecDocument,
    header: usize,
    name: &str,
    body: Vec<Cursor<'_>>,
) -> Result<FinCategory, SpecError> {
    let mut b = CategoryBuilder::new();
    let mut objects: Vec<String> = Vec::new();
    let mut morphisms: Vec<String> = Vec::new();
    let n_body = body.len();
    for mut cur in body {
        let kw = cur.name("statement")?;
        let line = cur.line;
        match kw.text {
            "objects" => {
                let names = cur.rest();
                if names.is_empty() {
                    return Err(cur.syntax("missing object names", &["object name"]));
                }
                for t in names {
                    if RESERVED.contains(&t.text) {
                        return Err(SpecError::Syntax {
                            line,
                            column: t.col,
                            message: format!("`{}` cannot name an object", t.text),
                            expected: vec!["object name".into()],
                        });
                    }
                    objects.push(t.text.to_string());
                    b.object(t.text);
                }
            }
            "arrow" => {
                let f = cur.name("morphism name")?;
                cur.punct(":")?;
                let dom = cur.name("domain")?;
                cur.punct("->")?;
                let cod = cur.name("codomain")?;
                cur.finish()?;
                for t in [dom, cod] {
                    if !objects.iter().any(|o| o == t.text) {
                        return Err(undeclared(line, t, "object"));
                    }
                }
                morphisms.push(f.text.to_string());
                b.morphism(f.text, dom.text, cod.text);
            }
            "identity" => {
                let x = cur.name("object")?;
                cur.punct("=")?;
                let f = cur.name("morphism")?;
                cur.finish()?;
                if !objects.iter().any(|o| o == x.text) {
                    return Err(undeclared(line, x, "object"));
                }
                if !morphisms.iter().any(|m| m == f.text) {
                    return Err(undeclared(line, f, "morphism"));
                }
                b.identity(x.text, f.text);
            }
            "compose" => {
                let g = cur.name("morphism")?;
                cur.punct(".")?;
                let f = cur.name("morphism")?;
                cur.punct("=")?;
                let h = cur.name("morphism")?;
                cur.finish()?;
                for t in [g, f, h] {
                    if !morphisms.iter().any(|m| m == t.text) {
                        return Err(undeclared(line, t, "morphism"));
                    }
                }
                b.compose(g.text, f.text, h.text);
            }
            "poset-chain" | "poset-powerset" | "discrete" | "product" => {
                if n_body > 1 {
                    return Err(SpecError::Syntax {
                        line,
                        column: kw.col,
                        message: format!("`{}` must be the only statement in its block", kw.text),
                        expected: vec![],
                    });
                }
                return match kw.text {
                    "poset-chain" => {
                        let n = cur.number("chain length")?;
                        cur.finish()?;
                        Ok(FinCategory::chain(n))
                    }
                    "poset-powerset" => {
                        let k = cur.number("base set size")?;
                        cur.finish()?;
                        if k > 6 {
                            return Err(cur.syntax("powerset base too large", &["at most 6"]));
                        }
                        Ok(FinCategory::powerset(k))
                    }
                    "discrete" => {
                        let names: Vec<&str> = cur.rest().iter().map(|t| t.text).collect();
                        FinCategory::from_preorder(&names, |i, j| i == j)
                            .map_err(|r| invalid(header, "category", name, r))
                    }
                    _ => {
                        let l = cur.name("category")?;
                        let r = cur.name("category")?;
                        cur.finish()?;
                        let lc = doc
                            .category(l.text)
                            .ok_or_else(|| undeclared(line, l, "category"))?;
                        let rc = doc
                            .category(r.text)
                            .ok_or_else(|| undeclared(line, r, "category"))?;
                        Ok(FinCategory::product(lc, rc))
                    }
                };
            }
            other => {
                return Err(SpecError::Syntax {
                    line,
                    column: kw.col,
                    message: format!("unknown category statement `{other}`"),
                    expected: [
                        "objects",
                        "arrow",
                        "identity",
                        "compose",
                        "poset-chain",
                        "poset-powerset",
                        "discrete",
                        "product",
                    ]
                    .iter()
                    .map(|s| format!("`{s}`"))
                    .collect(),
                })
            }
        }
    }
    b.build().map_err(|r| invalid(header, "category", name, r))
}

fn parse_functor(
    header: usize,
    name: &str,
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    body: Vec<Cursor<'_>>,
) -> Result<FinFunctor, SpecError> {
    let mut b = FunctorBuilder::new();
    for mut cur in body {
        let kw = cur.name("statement")?;
        let line = cur.line;
        let x = cur.name("source name")?;
        cur.punct("=")?;
        let y = cur.name("target name")?;
        cur.finish()?;
        match kw.text {
            "obj" => {
                source
                    .object(x.text)
                    .map_err(|_| undeclared(line, x, "object"))?;
                target
                    .object(y.text)
                    .map_err(|_| undeclared(line, y, "object"))?;
                b.map_object(x.text, y.text);
            }
            "mor" => {
                source
                    .morphism(x.text)
                    .map_err(|_| undeclared(line, x, "morphism"))?;
                target
                    .morphism(y.text)
                    .map_err(|_| undeclared(line, y, "morphism"))?;
                b.map_morphism(x.text, y.text);
            }
            other => {
                return Err(SpecError::Syntax {
                    line,
                    column: kw.col,
                    message: format!("unknown functor statement `{other}`"),
                    expected: vec!["`obj`".into(), "`mor`".into()],
                })
            }
        }
    }
    b.build(source, target)
        .map_err(|r| invalid(header, "functor", name, r))
}

fn parse_het(
    doc: &SpecDocument,
    header: usize,
    name: &str,
    sending: Arc<FinCategory>,
    receiving: Arc<FinCategory>,
    body: Vec<Cursor<'_>>,
) -> Result<HetBifunctor, SpecError> {
    let mut b = HetBuilder::new();
    let mut elements: Vec<String> = Vec::new();
    let has_element = |els: &[String], t: &Tok<'_>| els.iter().any(|e| e == t.text);
    for mut cur in body.iter().map(|c| Cursor {
        line: c.line,
        toks: c.toks.clone(),
        pos: 0,
        end_col: c.end_col,
    }) {
        let kw = cur.name("statement")?;
        let line = cur.line;
        match kw.text {
            "element" => {
                let u = cur.name("element name")?;
                cur.punct(":")?;
                let x = cur.name("sending object")?;
                cur.punct("~>")?;
                let a = cur.name("receiving object")?;
                cur.finish()?;
                sending
                    .object(x.text)
                    .map_err(|_| undeclared(line, x, "object"))?;
                receiving
                    .object(a.text)
                    .map_err(|_| undeclared(line, a, "object"))?;
                elements.push(u.text.to_string());
                b.element(u.text, x.text, a.text);
            }
            "rel" => {
                let x = cur.name("sending object")?;
                let a = cur.name("receiving object")?;
                cur.finish()?;
                sending
                    .object(x.text)
                    .map_err(|_| undeclared(line, x, "object"))?;
                receiving
                    .object(a.text)
                    .map_err(|_| undeclared(line, a, "object"))?;
                elements.push(format!("u_{}_{}", x.text, a.text));
                b.rel(x.text, a.text);
            }
            "lact" => {
                let k = cur.name("receiving morphism")?;
                let u = cur.name("element")?;
                cur.punct("=")?;
                let v = cur.name("element")?;
                cur.finish()?;
                receiving
                    .morphism(k.text)
                    .map_err(|_| undeclared(line, k, "morphism"))?;
                for t in [u, v] {
                    if !has_element(&elements, &t) {
                        return Err(undeclared(line, t, "het element"));
                    }
                }
                b.act_left(k.text, u.text, v.text);
            }
            "ract" => {
                let u = cur.name("element")?;
                let h = cur.name("sending morphism")?;
                cur.punct("=")?;
                let v = cur.name("element")?;
                cur.finish()?;
                sending
                    .morphism(h.text)
                    .map_err(|_| undeclared(line, h, "morphism"))?;
                for t in [u, v] {
                    if !has_element(&elements, &t) {
                        return Err(undeclared(line, t, "het element"));
                    }
                }
                b.act_right(u.text, h.text, v.text);
            }
            "hom" | "induced-left" | "induced-right" => {
                only_statement(&body, kw.text)?;
                let built = match kw.text {
                    "hom" => {
                        cur.finish()?;
                        if sending != receiving {
                            return Err(SpecError::Mismatch(format!(
                                "line {line}: `hom` needs the same category on both sides"
                            )));
                        }
                        hom_bifunctor(sending.clone())
                    }
                    kind => {
                        let f = cur.name("functor")?;
                        cur.finish()?;
                        let functor = doc
                            .functor(f.text)
                            .ok_or_else(|| undeclared(line, f, "functor"))?;
                        let het = if kind == "induced-left" {
                            induced_het_left(functor)
                        } else {
                            induced_het_right(functor)
                        };
                        if het.sending() != &sending || het.receiving() != &receiving {
                            return Err(SpecError::Mismatch(format!(
                                "line {line}: functor `{}` does not induce hets between the declared categories",
                                f.text
                            )));
                        }
                        het
                    }
                };
                // reuse the declared category handles
                return HetBuilder::from_het(&built)
                    .build(sending, receiving)
                    .map_err(|r| invalid(header, "het", name, r));
            }
            other => {
                return Err(SpecError::Syntax {
                    line,
                    column: kw.col,
                    message: format!("unknown het statement `{other}`"),
                    expected: [
                        "element",
                        "rel",
                        "lact",
                        "ract",
                        "hom",
                        "induced-left",
                        "induced-right",
                    ]
                    .iter()
                    .map(|s| format!("`{s}`"))
                    .collect(),
                })
            }
        }
    }
    b.build(sending, receiving)
        .map_err(|r| invalid(header, "het", name, r))
}

/// Writes `doc` in explicit form, omitting only entries the parser fills in.
pub fn serialize(doc: &SpecDocument) -> String {
    let mut out = String::new();
    for (i, item) in doc.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = write_item(&mut out, item);
    }
    out
}

fn write_item(out: &mut String, item: &Item) -> fmt::Result {
    use std::fmt::Write;
    match item {
        Item::Category { name, category: c } => {
            writeln!(out, "category {name}")?;
            let names: Vec<&str> = c.objects().map(|x| c.object_name(x)).collect();
            if !names.is_empty() {
                writeln!(out, "  objects {}", names.join(" "))?;
            }
            for f in c.morphisms() {
                writeln!(
                    out,
                    "  arrow {} : {} -> {}",
                    c.morphism_name(f),
                    c.object_name(c.dom(f)),
                    c.object_name(c.cod(f))
                )?;
            }
            for x in c.objects() {
                writeln!(
                    out,
                    "  identity {} = {}",
                    c.object_name(x),
                    c.morphism_name(c.identity(x))
                )?;
            }
            for f in c.morphisms() {
                for &g in c.outgoing(c.cod(f)) {
                    let h = c.comp_unchecked(g, f);
                    let forced = (c.is_identity(f) && h == g)
                        || (c.is_identity(g) && h == f)
                        || c.hom_set(c.dom(f), c.cod(g)).len() == 1;
                    if !forced {
                        writeln!(
                            out,
                            "  compose {} . {} = {}",
                            c.morphism_name(g),
                            c.morphism_name(f),
                            c.morphism_name(h)
                        )?;
                    }
                }
            }
        }
        Item::Functor {
            name,
            source,
            target,
            functor,
        } => {
            writeln!(out, "functor {name} : {source} -> {target}")?;
            let (s, t) = (functor.source(), functor.target());
            for x in s.objects() {
                writeln!(
                    out,
                    "  obj {} = {}",
                    s.object_name(x),
                    t.object_name(functor.obj(x))
                )?;
            }
            for f in s.morphisms() {
                if !functor.mor_is_forced(f) {
                    writeln!(
                        out,
                        "  mor {} = {}",
                        s.morphism_name(f),
                        t.morphism_name(functor.mor(f))
                    )?;
                }
            }
        }
        Item::Het {
            name,
            sending,
            receiving,
            het,
        } => {
            writeln!(out, "het {name} : {sending} ~> {receiving}")?;
            let (s, r) = (het.sending(), het.receiving());
            for d in het.elements() {
                writeln!(
                    out,
                    "  element {} : {} ~> {}",
                    het.element_name(d),
                    s.object_name(het.src(d)),
                    r.object_name(het.dst(d))
                )?;
            }
            for d in het.elements() {
                for &k in r.outgoing(het.dst(d)) {
                    if !het.left_is_forced(k, d) {
                        writeln!(
                            out,
                            "  lact {} {} = {}",
                            r.morphism_name(k),
                            het.element_name(d),
                            het.element_name(het.left_unchecked(k, d))
                        )?;
                    }
                }
                for &h in s.incoming(het.src(d)) {
                    if !het.right_is_forced(d, h) {
                        writeln!(
                            out,
                            "  ract {} {} = {}",
                            het.element_name(d),
                            s.morphism_name(h),
                            het.element_name(het.right_unchecked(d, h))
                        )?;
                    }
                }
            }
        }
    }
    writeln!(out, "end")
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "\
# ceiling het between two chains
category X
  poset-chain 5
end
category A
  poset-chain 3
end
het ceil : X ~> A
  rel 0 0
  rel 0 1
  rel 1 1
  rel 2 1
  rel 0 2
  rel 1 2
  rel 2 2
  rel 3 2
  rel 4 2
end
";

    #[test]
    fn parses_sugar_and_relations() {
        let doc = parse_spec(CHAIN).unwrap();
        let het = doc.het("ceil").unwrap();
        assert_eq!(het.element_count(), 9);
        assert_eq!(het.het_set_named("3", "2").unwrap().len(), 1);
        assert!(het.element("u_3_2").is_ok());
    }

    #[test]
    fn round_trip() {
        let doc = parse_spec(CHAIN).unwrap();
        let text = serialize(&doc);
        assert_eq!(parse_spec(&text).unwrap(), doc);
        assert_eq!(serialize(&parse_spec(&text).unwrap()), text);
    }

    #[test]
    fn undeclared_category_is_located() {
        let err =
            parse_spec("category X\n  poset-chain 2\nend\nhet h : X ~> Z\nend\n").unwrap_err();
        assert_eq!(
            err,
            SpecError::Undeclared {
                line: 4,
                column: 14,
                kind: "category",
                name: "Z".into()
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_spec("category C\n  objects a\n  arrow f a -> a\nend\n").unwrap_err();
        match err {
            SpecError::Syntax {
                line,
                column,
                expected,
                ..
            } => {
                assert_eq!((line, column), (3, 11));
                assert_eq!(expected, ["`:`"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_spec("category C\n  objects a\n").unwrap_err();
        assert!(matches!(err, SpecError::Syntax { .. }));
    }

    #[test]
    fn invalid_blocks_report_violations() {
        let text = "category C\n  objects a b\n  arrow ida : a -> a\n  arrow idb : b -> b\n  identity a = ida\nend\n";
        match parse_spec(text).unwrap_err() {
            SpecError::Invalid { line, report, .. } => {
                assert_eq!(line, 1);
                assert!(report
                    .violations
                    .iter()
                    .any(|v| v.law == "missing identity" && v.witness == ["b"]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
