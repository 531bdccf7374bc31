//! Lexer and recursive-descent parser for the text format.

use crate::dsl::ast::*;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Ident(String),
    LBrace,
    RBrace,
    Colon,
    Comma,
    Semi,
    Eq,
    LParen,
    RParen,
    Pipe,
    Star,
    Arrow,
    FatArrow,
    Leq,
    MapsTo,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    line: usize,
    col: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '@' | '#' | '+' | '\'')
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
                        line: &mut usize,
                        col: &mut usize| {
            let c = chars.next().unwrap();
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars, &mut line, &mut col);
            continue;
        }
        if c == '#' && col == 1 {
            // line comment only at line start, to keep `#` usable in names
            while let Some(&c2) = chars.peek() {
                bump(&mut chars, &mut line, &mut col);
                if c2 == '\n' {
                    break;
                }
            }
            continue;
        }
        let kind = match c {
            '{' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::LBrace
            }
            '}' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::RBrace
            }
            ':' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::Colon
            }
            ',' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::Comma
            }
            ';' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::Semi
            }
            '(' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::LParen
            }
            ')' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::RParen
            }
            '*' => {
                bump(&mut chars, &mut line, &mut col);
                TokKind::Star
            }
            '|' => {
                bump(&mut chars, &mut line, &mut col);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars, &mut line, &mut col);
                    if chars.peek() == Some(&'>') {
                        bump(&mut chars, &mut line, &mut col);
                        TokKind::MapsTo
                    } else {
                        return Err(Error::Parse {
                            line: tl,
                            col: tc,
                            msg: "expected `|->`".into(),
                        });
                    }
                } else {
                    TokKind::Pipe
                }
            }
            '-' => {
                bump(&mut chars, &mut line, &mut col);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars, &mut line, &mut col);
                    TokKind::Arrow
                } else {
                    return Err(Error::Parse {
                        line: tl,
                        col: tc,
                        msg: "expected `->`".into(),
                    });
                }
            }
            '=' => {
                bump(&mut chars, &mut line, &mut col);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars, &mut line, &mut col);
                    TokKind::FatArrow
                } else {
                    TokKind::Eq
                }
            }
            '<' => {
                bump(&mut chars, &mut line, &mut col);
                if chars.peek() == Some(&'=') {
                    bump(&mut chars, &mut line, &mut col);
                    TokKind::Leq
                } else {
                    return Err(Error::Parse {
                        line: tl,
                        col: tc,
                        msg: "expected `<=`".into(),
                    });
                }
            }
            c if is_ident_char(c) => {
                let mut s = String::new();
                while let Some(&c2) = chars.peek() {
                    if is_ident_char(c2) {
                        s.push(bump(&mut chars, &mut line, &mut col));
                    } else {
                        break;
                    }
                }
                TokKind::Ident(s)
            }
            other => {
                return Err(Error::Parse {
                    line: tl,
                    col: tc,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        };
        toks.push(Tok { kind, line: tl, col: tc });
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn peek2(&self) -> Option<&TokKind> {
        self.toks.get(self.pos + 1).map(|t| &t.kind)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn next(&mut self) -> Result<TokKind> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.kind.clone())
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn expect(&mut self, kind: TokKind, what: &str) -> Result<()> {
        let got = self.next()?;
        if got == kind {
            Ok(())
        } else {
            self.pos -= 1;
            self.err(format!("expected {what}"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.next()? {
            TokKind::Ident(s) => Ok(s),
            _ => {
                self.pos -= 1;
                self.err(format!("expected {what}"))
            }
        }
    }

    fn eat_comma(&mut self) -> bool {
        if self.peek() == Some(&TokKind::Comma) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident_list(&mut self, what: &str) -> Result<Vec<String>> {
        let mut out = vec![self.ident(what)?];
        while self.eat_comma() {
            out.push(self.ident(what)?);
        }
        Ok(out)
    }

    fn path_expr(&mut self) -> Result<PathExpr> {
        if matches!(self.peek(), Some(TokKind::Ident(s)) if s == "id")
            && self.peek2() == Some(&TokKind::LParen)
        {
            self.pos += 2;
            let o = self.ident("object name in id(..)")?;
            self.expect(TokKind::RParen, "`)`")?;
            return Ok(PathExpr::Id(o));
        }
        let mut names = vec![self.ident("arrow name")?];
        while self.peek() == Some(&TokKind::Semi) {
            self.pos += 1;
            names.push(self.ident("arrow name")?);
        }
        Ok(PathExpr::Comp(names))
    }

    fn tpath_expr(&mut self) -> Result<TPathExpr> {
        if matches!(self.peek(), Some(TokKind::Ident(s)) if s == "id")
            && self.peek2() == Some(&TokKind::LParen)
        {
            self.pos += 2;
            let o = self.ident("object name in id(..)")?;
            self.expect(TokKind::RParen, "`)`")?;
            return Ok(TPathExpr::Id(o));
        }
        let mut terms = vec![self.tterm_expr()?];
        while self.peek() == Some(&TokKind::Semi) {
            self.pos += 1;
            terms.push(self.tterm_expr()?);
        }
        Ok(TPathExpr::Comp(terms))
    }

    fn tterm_expr(&mut self) -> Result<TTermExpr> {
        self.expect(TokKind::LParen, "`(` starting a whiskered term")?;
        let left = self.ident("left context object")?;
        self.expect(TokKind::Pipe, "`|`")?;
        let proto = self.ident("generator name")?;
        self.expect(TokKind::Pipe, "`|`")?;
        let right = self.ident("right context object")?;
        self.expect(TokKind::RParen, "`)`")?;
        Ok(TTermExpr { left, proto, right })
    }

    fn arrow_decl(&mut self) -> Result<ArrowDecl> {
        let name = self.ident("arrow name")?;
        self.expect(TokKind::Colon, "`:`")?;
        let src = self.ident("source object")?;
        self.expect(TokKind::Arrow, "`->`")?;
        let tgt = self.ident("target object")?;
        Ok(ArrowDecl { name, src, tgt })
    }

    fn field_keyword(&mut self) -> Result<String> {
        let kw = self.ident("field name")?;
        self.expect(TokKind::Colon, "`:` after field name")?;
        Ok(kw)
    }

    fn category_block(&mut self) -> Result<CategoryBlock> {
        let name = self.ident("category name")?;
        self.expect(TokKind::LBrace, "`{`")?;
        let mut b = CategoryBlock { name, objects: vec![], arrows: vec![], relations: vec![] };
        while self.peek() != Some(&TokKind::RBrace) {
            match self.field_keyword()?.as_str() {
                "objects" => b.objects = self.ident_list("object name")?,
                "arrows" => loop {
                    b.arrows.push(self.arrow_decl()?);
                    if !self.eat_comma() {
                        break;
                    }
                },
                "relations" => loop {
                    let l = self.path_expr()?;
                    self.expect(TokKind::Eq, "`=` in relation")?;
                    let r = self.path_expr()?;
                    b.relations.push((l, r));
                    if !self.eat_comma() {
                        break;
                    }
                },
                other => return self.err(format!("unknown category field `{other}`")),
            }
        }
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(b)
    }

    fn tensor_category_block(&mut self) -> Result<TensorCategoryBlock> {
        let name = self.ident("tensor category name")?;
        self.expect(TokKind::LBrace, "`{`")?;
        let mut objects: Option<ObjectsDecl> = None;
        let mut elems: Vec<String> = vec![];
        let mut unit: Option<String> = None;
        let mut entries: Vec<(String, String, String)> = vec![];
        let mut sigma = SigmaDecl::Identity;
        let mut symmetry = vec![];
        let mut arrows = vec![];
        let mut relations = vec![];
        while self.peek() != Some(&TokKind::RBrace) {
            match self.field_keyword()?.as_str() {
                "objects" => {
                    if matches!(self.peek(), Some(TokKind::Ident(s)) if s == "free")
                        && self.peek2() == Some(&TokKind::LParen)
                    {
                        self.pos += 2;
                        let generators = if self.peek() == Some(&TokKind::RParen) {
                            vec![]
                        } else {
                            self.ident_list("free generator")?
                        };
                        self.expect(TokKind::RParen, "`)`")?;
                        let kw = self.ident("`max`")?;
                        if kw != "max" {
                            return self.err("expected `max` after free(..)");
                        }
                        let n = self.ident("word length bound")?;
                        let max_len = match n.parse() {
                            Ok(v) => v,
                            Err(_) => return self.err("word length bound must be a number"),
                        };
                        objects = Some(ObjectsDecl::Free { generators, max_len });
                    } else {
                        elems = self.ident_list("object name")?;
                    }
                }
                "unit" => unit = Some(self.ident("unit object")?),
                "table" => loop {
                    let a = self.ident("object name")?;
                    self.expect(TokKind::Star, "`*`")?;
                    let b = self.ident("object name")?;
                    self.expect(TokKind::Eq, "`=`")?;
                    let c = self.ident("object name")?;
                    entries.push((a, b, c));
                    if !self.eat_comma() {
                        break;
                    }
                },
                "sigma" => {
                    sigma = match self.ident("`identity`, `free` or `explicit`")?.as_str() {
                        "identity" => SigmaDecl::Identity,
                        "free" => SigmaDecl::Free,
                        "explicit" => SigmaDecl::Explicit,
                        _ => return self.err("sigma must be `identity`, `free` or `explicit`"),
                    }
                }
                "symmetry" => loop {
                    let x = self.ident("object name")?;
                    self.expect(TokKind::Star, "`*`")?;
                    let y = self.ident("object name")?;
                    self.expect(TokKind::Eq, "`=`")?;
                    symmetry.push((x, y, self.tpath_expr()?));
                    if !self.eat_comma() {
                        break;
                    }
                },
                "arrows" => loop {
                    arrows.push(self.arrow_decl()?);
                    if !self.eat_comma() {
                        break;
                    }
                },
                "relations" => loop {
                    let l = self.tpath_expr()?;
                    self.expect(TokKind::Eq, "`=` in relation")?;
                    let r = self.tpath_expr()?;
                    relations.push((l, r));
                    if !self.eat_comma() {
                        break;
                    }
                },
                other => return self.err(format!("unknown tensor category field `{other}`")),
            }
        }
        self.expect(TokKind::RBrace, "`}`")?;
        let objects = match objects {
            Some(o) => o,
            None => {
                let unit = match unit {
                    Some(u) => u,
                    None => return self.err(format!("tensor category `{name}` needs a unit")),
                };
                ObjectsDecl::Table { elems, unit, entries }
            }
        };
        Ok(TensorCategoryBlock { name, objects, sigma, symmetry, arrows, relations })
    }

    fn entries(&mut self) -> Result<Vec<(String, PathExpr)>> {
        let mut out = Vec::new();
        while self.peek() != Some(&TokKind::RBrace) {
            let lhs = self.ident("entry left-hand side")?;
            self.expect(TokKind::MapsTo, "`|->`")?;
            out.push((lhs, self.path_expr()?));
        }
        Ok(out)
    }

    fn functor_header(&mut self, arrow: TokKind) -> Result<(String, String, String)> {
        let name = self.ident("name")?;
        self.expect(TokKind::Colon, "`:`")?;
        let src = self.ident("source")?;
        let what = if arrow == TokKind::Arrow { "`->`" } else { "`=>`" };
        self.expect(arrow, what)?;
        let tgt = self.ident("target")?;
        self.expect(TokKind::LBrace, "`{`")?;
        Ok((name, src, tgt))
    }

    fn functor_block(&mut self) -> Result<FunctorBlock> {
        let (name, src, tgt) = self.functor_header(TokKind::Arrow)?;
        let entries = self.entries()?;
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(FunctorBlock { name, src, tgt, entries })
    }

    fn tensor_functor_block(&mut self) -> Result<TensorFunctorBlock> {
        let (name, src, tgt) = self.functor_header(TokKind::Arrow)?;
        let entries = self.entries()?;
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(TensorFunctorBlock { name, src, tgt, entries })
    }

    fn transformation_block(&mut self) -> Result<TransformationBlock> {
        let (name, src, tgt) = self.functor_header(TokKind::FatArrow)?;
        let components = self.entries()?;
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(TransformationBlock { name, src, tgt, components })
    }

    fn tensor_transformation_block(&mut self) -> Result<TensorTransformationBlock> {
        let (name, src, tgt) = self.functor_header(TokKind::FatArrow)?;
        let components = self.entries()?;
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(TensorTransformationBlock { name, src, tgt, components })
    }

    fn diagram_block(&mut self, tensor: bool) -> Result<DiagramBlock> {
        let name = self.ident("diagram name")?;
        self.expect(TokKind::LBrace, "`{`")?;
        let mut b = DiagramBlock { name, tensor, stages: vec![], order: vec![], maps: vec![] };
        while self.peek() != Some(&TokKind::RBrace) {
            match self.field_keyword()?.as_str() {
                "stages" => b.stages = self.ident_list("stage name")?,
                "order" => loop {
                    let lo = self.ident("stage name")?;
                    self.expect(TokKind::Leq, "`<=`")?;
                    let hi = self.ident("stage name")?;
                    b.order.push((lo, hi));
                    if !self.eat_comma() {
                        break;
                    }
                },
                "maps" => loop {
                    let lo = self.ident("stage name")?;
                    self.expect(TokKind::Leq, "`<=`")?;
                    let hi = self.ident("stage name")?;
                    self.expect(TokKind::Colon, "`:`")?;
                    let f = self.ident("functor name")?;
                    b.maps.push((lo, hi, f));
                    if !self.eat_comma() {
                        break;
                    }
                },
                other => return self.err(format!("unknown diagram field `{other}`")),
            }
        }
        self.expect(TokKind::RBrace, "`}`")?;
        Ok(b)
    }

    fn construction_block(&mut self) -> Result<ConstructionBlock> {
        let name = self.ident("construction name")?;
        self.expect(TokKind::LBrace, "`{`")?;
        let mut kind = None;
        let mut category = None;
        let mut args = vec![];
        while self.peek() != Some(&TokKind::RBrace) {
            match self.field_keyword()?.as_str() {
                "kind" => kind = Some(self.ident("construction kind")?),
                "category" => category = Some(self.ident("`cat` or `tensor`")?),
                "args" => args = self.ident_list("argument name")?,
                other => return self.err(format!("unknown construction field `{other}`")),
            }
        }
        self.expect(TokKind::RBrace, "`}`")?;
        let kind = match kind {
            Some(k) => k,
            None => return self.err("construction needs a kind"),
        };
        let category = category.unwrap_or_else(|| "cat".to_string());
        Ok(ConstructionBlock { name, kind, category, args })
    }

    fn document(&mut self) -> Result<Document> {
        let mut blocks = Vec::new();
        while self.peek().is_some() {
            let kw = self.ident("block keyword")?;
            let block = match kw.as_str() {
                "category" => Block::Category(self.category_block()?),
                "functor" => Block::Functor(self.functor_block()?),
                "transformation" => Block::Transformation(self.transformation_block()?),
                "diagram" => Block::Diagram(self.diagram_block(false)?),
                "construction" => Block::Construction(self.construction_block()?),
                "tensor" => match self.ident("block keyword after `tensor`")?.as_str() {
                    "category" => Block::TensorCategory(self.tensor_category_block()?),
                    "functor" => Block::TensorFunctor(self.tensor_functor_block()?),
                    "transformation" => {
                        Block::TensorTransformation(self.tensor_transformation_block()?)
                    }
                    "diagram" => Block::Diagram(self.diagram_block(true)?),
                    other => return self.err(format!("unknown block kind `tensor {other}`")),
                },
                other => return self.err(format!("unknown block kind `{other}`")),
            };
            if blocks.iter().any(|b: &Block| b.name() == block.name()) {
                return self.err(format!("duplicate block name `{}`", block.name()));
            }
            blocks.push(block);
        }
        Ok(Document { blocks })
    }
}

/// Parses a document, reporting errors with line and column.
pub fn parse(text: &str) -> Result<Document> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.document()
}
