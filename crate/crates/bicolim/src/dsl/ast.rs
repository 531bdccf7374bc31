//! Abstract syntax of the text format.
//!
//! A document is an ordered list of named blocks. The printer in this
//! module is canonical: parsing its output reproduces the document
//! exactly, and printing a parsed canonical file is byte-identical.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Document {
    pub blocks: Vec<Block>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Block {
    Category(CategoryBlock),
    TensorCategory(TensorCategoryBlock),
    Functor(FunctorBlock),
    TensorFunctor(TensorFunctorBlock),
    Transformation(TransformationBlock),
    TensorTransformation(TensorTransformationBlock),
    Diagram(DiagramBlock),
    Construction(ConstructionBlock),
}

impl Block {
    pub fn name(&self) -> &str {
        match self {
            Block::Category(b) => &b.name,
            Block::TensorCategory(b) => &b.name,
            Block::Functor(b) => &b.name,
            Block::TensorFunctor(b) => &b.name,
            Block::Transformation(b) => &b.name,
            Block::TensorTransformation(b) => &b.name,
            Block::Diagram(b) => &b.name,
            Block::Construction(b) => &b.name,
        }
    }
}

/// A composable path written `f;g;h`, or an identity `id(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PathExpr {
    Id(String),
    Comp(Vec<String>),
}

impl fmt::Display for PathExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathExpr::Id(o) => write!(f, "id({o})"),
            PathExpr::Comp(names) => write!(f, "{}", names.join(";")),
        }
    }
}

/// A whiskered generator `(a|p|b)` meaning `a (x) p (x) b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TTermExpr {
    pub left: String,
    pub proto: String,
    pub right: String,
}

impl fmt::Display for TTermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{}|{})", self.left, self.proto, self.right)
    }
}

/// A composable sequence of whiskered generators, or `id(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TPathExpr {
    Id(String),
    Comp(Vec<TTermExpr>),
}

impl fmt::Display for TPathExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TPathExpr::Id(o) => write!(f, "id({o})"),
            TPathExpr::Comp(terms) => {
                let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join(" ; "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryBlock {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<(PathExpr, PathExpr)>,
}

/// Object declarations of a tensor category: an explicit element list
/// with a (possibly partial) multiplication table, or a truncated free
/// monoid `free(x, y) max 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ObjectsDecl {
    Table {
        elems: Vec<String>,
        unit: String,
        entries: Vec<(String, String, String)>,
    },
    Free {
        generators: Vec<String>,
        max_len: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SigmaDecl {
    Identity,
    Free,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorCategoryBlock {
    pub name: String,
    pub objects: ObjectsDecl,
    pub sigma: SigmaDecl,
    /// Explicit symmetry components `x * y = <path>`; used only with
    /// `sigma: explicit`.
    pub symmetry: Vec<(String, String, TPathExpr)>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<(TPathExpr, TPathExpr)>,
}

/// Entries map source objects to target objects and source arrows to
/// target paths; both are resolved by the kind of the left-hand name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorBlock {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub entries: Vec<(String, PathExpr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorFunctorBlock {
    pub name: String,
    pub src: String,
    pub tgt: String,
    /// Object entries (monoid elements) and generator entries (paths in
    /// the target carrier), resolved by the left-hand name.
    pub entries: Vec<(String, PathExpr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformationBlock {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub components: Vec<(String, PathExpr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorTransformationBlock {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub components: Vec<(String, PathExpr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramBlock {
    pub name: String,
    pub tensor: bool,
    pub stages: Vec<String>,
    pub order: Vec<(String, String)>,
    /// `(lower stage, upper stage, functor name)`.
    pub maps: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionBlock {
    pub name: String,
    pub kind: String,
    pub category: String,
    pub args: Vec<String>,
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    label: &str,
    items: &[T],
) -> fmt::Result {
    if items.is_empty() {
        return Ok(());
    }
    writeln!(f, "  {label}:")?;
    for (i, item) in items.iter().enumerate() {
        let sep = if i + 1 < items.len() { "," } else { "" };
        writeln!(f, "    {item}{sep}")?;
    }
    Ok(())
}

struct Rel<'a, T>(&'a T, &'a T);

impl<T: fmt::Display> fmt::Display for Rel<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.0, self.1)
    }
}

impl fmt::Display for ArrowDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.src, self.tgt)
    }
}

impl fmt::Display for CategoryBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "category {} {{", self.name)?;
        if !self.objects.is_empty() {
            writeln!(f, "  objects: {}", self.objects.join(", "))?;
        }
        write_list(f, "arrows", &self.arrows)?;
        let rels: Vec<Rel<'_, PathExpr>> =
            self.relations.iter().map(|(l, r)| Rel(l, r)).collect();
        write_list(f, "relations", &rels)?;
        write!(f, "}}")
    }
}

struct TableEntry<'a>(&'a (String, String, String));

impl fmt::Display for TableEntry<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {} = {}", self.0 .0, self.0 .1, self.0 .2)
    }
}

struct SymEntry<'a>(&'a (String, String, TPathExpr));

impl fmt::Display for SymEntry<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {} = {}", self.0 .0, self.0 .1, self.0 .2)
    }
}

impl fmt::Display for TensorCategoryBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tensor category {} {{", self.name)?;
        match &self.objects {
            ObjectsDecl::Table { elems, unit, entries } => {
                writeln!(f, "  objects: {}", elems.join(", "))?;
                writeln!(f, "  unit: {unit}")?;
                let rows: Vec<TableEntry<'_>> = entries.iter().map(TableEntry).collect();
                write_list(f, "table", &rows)?;
            }
            ObjectsDecl::Free { generators, max_len } => {
                writeln!(f, "  objects: free({}) max {}", generators.join(", "), max_len)?;
            }
        }
        let sigma = match self.sigma {
            SigmaDecl::Identity => "identity",
            SigmaDecl::Free => "free",
            SigmaDecl::Explicit => "explicit",
        };
        writeln!(f, "  sigma: {sigma}")?;
        let sym: Vec<SymEntry<'_>> = self.symmetry.iter().map(SymEntry).collect();
        write_list(f, "symmetry", &sym)?;
        write_list(f, "arrows", &self.arrows)?;
        let rels: Vec<Rel<'_, TPathExpr>> =
            self.relations.iter().map(|(l, r)| Rel(l, r)).collect();
        write_list(f, "relations", &rels)?;
        write!(f, "}}")
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[(String, PathExpr)]) -> fmt::Result {
    for (lhs, rhs) in entries {
        writeln!(f, "  {lhs} |-> {rhs}")?;
    }
    Ok(())
}

impl fmt::Display for FunctorBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "functor {}: {} -> {} {{", self.name, self.src, self.tgt)?;
        write_entries(f, &self.entries)?;
        write!(f, "}}")
    }
}

impl fmt::Display for TensorFunctorBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tensor functor {}: {} -> {} {{", self.name, self.src, self.tgt)?;
        write_entries(f, &self.entries)?;
        write!(f, "}}")
    }
}

impl fmt::Display for TransformationBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "transformation {}: {} => {} {{", self.name, self.src, self.tgt)?;
        write_entries(f, &self.components)?;
        write!(f, "}}")
    }
}

impl fmt::Display for TensorTransformationBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "tensor transformation {}: {} => {} {{",
            self.name, self.src, self.tgt
        )?;
        write_entries(f, &self.components)?;
        write!(f, "}}")
    }
}

struct OrderEntry<'a>(&'a (String, String));

impl fmt::Display for OrderEntry<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.0 .0, self.0 .1)
    }
}

struct MapEntry<'a>(&'a (String, String, String));

impl fmt::Display for MapEntry<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}: {}", self.0 .0, self.0 .1, self.0 .2)
    }
}

impl fmt::Display for DiagramBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = if self.tensor { "tensor diagram" } else { "diagram" };
        writeln!(f, "{kw} {} {{", self.name)?;
        writeln!(f, "  stages: {}", self.stages.join(", "))?;
        let ord: Vec<OrderEntry<'_>> = self.order.iter().map(OrderEntry).collect();
        write_list(f, "order", &ord)?;
        let maps: Vec<MapEntry<'_>> = self.maps.iter().map(MapEntry).collect();
        write_list(f, "maps", &maps)?;
        write!(f, "}}")
    }
}

impl fmt::Display for ConstructionBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "construction {} {{", self.name)?;
        writeln!(f, "  kind: {}", self.kind)?;
        writeln!(f, "  category: {}", self.category)?;
        if !self.args.is_empty() {
            writeln!(f, "  args: {}", self.args.join(", "))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Category(b) => b.fmt(f),
            Block::TensorCategory(b) => b.fmt(f),
            Block::Functor(b) => b.fmt(f),
            Block::TensorFunctor(b) => b.fmt(f),
            Block::Transformation(b) => b.fmt(f),
            Block::TensorTransformation(b) => b.fmt(f),
            Block::Diagram(b) => b.fmt(f),
            Block::Construction(b) => b.fmt(f),
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}
