use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use bicolim::cat::fpcat::{Bounds, FpCategory};
use bicolim::cat::functor::parse_path;
use bicolim::colimit::{
    coequalizer_cat, coequifier_cat, coinserter_cat, coinverter_cat, coproduct_cat,
    directed_colimit_cat, pushout_cat, tensor_with_category_cat,
};
use bicolim::dsl::ast::{Block, ConstructionBlock, Document};
use bicolim::dsl::resolve::{
    category_block, functor_block, tensor_category_block, tensor_functor_block,
    tensor_transformation_block, transformation_block, Env,
};
use bicolim::dsl::{parse, resolve};
use bicolim::error::Error;
use bicolim::tensor_colimit::{
    coequalizer_tensor, coequifier_tensor, coinserter_tensor, coinverter_tensor,
    coproduct_tensor, directed_colimit_tensor, pushout_tensor,
};
use bicolim::verify::{
    pi0_tensor, verify_coequalizer_cat, verify_coequalizer_tensor, verify_coequifier_cat,
    verify_coinserter_cat, verify_coinserter_tensor, verify_coinverter_cat,
    verify_coproduct_cat, verify_coproduct_tensor, verify_pushout_cat, verify_pushout_tensor,
    UPReport,
};

#[derive(Parser)]
#[command(name = "bicolim", version, about = "Bicategorical colimits of finitely presented categories and strict symmetric tensor categories")]
struct Cli {
    /// Bound on morphism word length.
    #[arg(long, global = true, default_value_t = 12)]
    max_len: usize,
    /// Bound on hom-set enumeration.
    #[arg(long, global = true, default_value_t = 5000)]
    max_hom: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Export::Dsl)]
    export: Export,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    Dsl,
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// Builds a colimit and writes the result document.
    Construct {
        /// coproduct | coinserter | coequifier | coinverter | coequalizer |
        /// pushout | directed | tensor-with
        #[arg(long)]
        kind: String,
        /// cat | tensor
        #[arg(long, default_value = "cat")]
        category: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        cell: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-runs a construction and verifies its universal property against
    /// a test category.
    CheckUniversal {
        #[arg(long)]
        construction: PathBuf,
        #[arg(long)]
        test: PathBuf,
    },
    /// Connected components of the first category in the document.
    Pi0 {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Hom-set representatives between two objects, in shortlex order.
    Hom {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
    },
    /// Normal form of a morphism expression.
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        term: String,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

type CliResult<T> = Result<T, Failure>;

fn fail(e: Error) -> Failure {
    let code = match &e {
        Error::Parse { .. } => 3,
        Error::BoundExceeded(_) | Error::UnknownEquality(_) | Error::NotSaturated(_) => 2,
        _ => 1,
    };
    Failure { code, msg: e.to_string() }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 3, msg: msg.into() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.msg.is_empty() {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let bounds = Bounds { max_len: cli.max_len, max_hom: cli.max_hom };
    match cli.cmd {
        Cmd::Construct { kind, category, input, left, right, cell, out } => {
            cmd_construct(bounds, cli.export, &kind, &category, &input, left, right, cell, &out)
        }
        Cmd::CheckUniversal { construction, test } => {
            cmd_check_universal(bounds, cli.export, &construction, &test)
        }
        Cmd::Pi0 { input } => cmd_pi0(bounds, cli.export, &input),
        Cmd::Hom { input, src, dst } => cmd_hom(bounds, &input, &src, &dst),
        Cmd::Normalize { input, term } => cmd_normalize(bounds, &input, &term),
    }
}

fn read_doc(path: &PathBuf, bounds: Bounds) -> CliResult<(Document, Env)> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = parse(&text).map_err(fail)?;
    let env = resolve(&doc, bounds).map_err(fail)?;
    Ok((doc, env))
}

fn pick_args(
    env: &Env,
    kind: &str,
    category: &str,
    left: Option<String>,
    right: Option<String>,
    cell: Option<String>,
) -> CliResult<Vec<String>> {
    let flags: Vec<String> = match kind {
        "coproduct" | "coinserter" | "coequalizer" | "coequifier" | "pushout"
        | "tensor_with" => match (left, right) {
            (Some(l), Some(r)) => vec![l, r],
            (None, None) => vec![],
            _ => return Err(usage("--left and --right must be given together")),
        },
        "coinverter" => cell.map(|c| vec![c]).unwrap_or_default(),
        "directed" => left.map(|l| vec![l]).unwrap_or_default(),
        other => return Err(usage(format!("unknown construction kind `{other}`"))),
    };
    if !flags.is_empty() {
        return Ok(flags);
    }
    env.constructions
        .iter()
        .find(|c| c.kind == kind && c.category == category)
        .map(|c| c.args.clone())
        .ok_or_else(|| {
            usage("no construction arguments: pass --left/--right/--cell or add a construction block")
        })
}

/// Collects output blocks, keeping names unique.
struct Builder {
    blocks: Vec<Block>,
}

impl Builder {
    fn fresh(&self, base: &str) -> String {
        let mut n = base.to_string();
        while self.blocks.iter().any(|b| b.name() == n) {
            n.push('_');
        }
        n
    }

    fn push(&mut self, b: Block) -> String {
        let name = b.name().to_string();
        self.blocks.push(b);
        name
    }
}

fn get_cat<'a>(env: &'a Env, name: &str) -> CliResult<&'a FpCategory> {
    env.cats
        .get(name)
        .ok_or_else(|| usage(format!("unknown category `{name}`")))
}

fn get_tcat<'a>(
    env: &'a Env,
    name: &str,
) -> CliResult<&'a bicolim::tensor::category::TensorCategory> {
    env.tcats
        .get(name)
        .ok_or_else(|| usage(format!("unknown tensor category `{name}`")))
}

fn arg(args: &[String], i: usize) -> CliResult<&String> {
    args.get(i).ok_or_else(|| usage("too few construction arguments"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    bounds: Bounds,
    export: Export,
    kind: &str,
    category: &str,
    input: &PathBuf,
    left: Option<String>,
    right: Option<String>,
    cell: Option<String>,
    out: &PathBuf,
) -> CliResult<()> {
    // `tensor-with` on the command line; `-` is not an identifier character
    // in the text format, so block kinds use `tensor_with`.
    let kind = kind.replace('-', "_");
    let kind = kind.as_str();
    let (doc, env) = read_doc(input, bounds)?;
    let args = pick_args(&env, kind, category, left, right, cell)?;
    let mut b = Builder {
        blocks: doc
            .blocks
            .iter()
            .filter(|x| !matches!(x, Block::Construction(_)))
            .cloned()
            .collect(),
    };
    match category {
        "cat" => construct_cat(&doc, &env, kind, &args, &mut b)?,
        "tensor" => construct_tensor(&doc, &env, kind, &args, &mut b)?,
        other => return Err(usage(format!("unknown category flavor `{other}`"))),
    }
    let main = b.fresh("main");
    b.push(Block::Construction(ConstructionBlock {
        name: main,
        kind: kind.to_string(),
        category: category.to_string(),
        args,
    }));
    let outdoc = Document { blocks: b.blocks };
    let printed = outdoc.to_string();
    // re-validate everything before writing
    let reparsed = parse(&printed).map_err(fail)?;
    resolve(&reparsed, bounds).map_err(fail)?;
    let payload = match export {
        Export::Dsl => printed,
        Export::Records => {
            let mut s = serde_json::to_string_pretty(&outdoc)
                .map_err(|e| Failure { code: 1, msg: e.to_string() })?;
            s.push('\n');
            s
        }
    };
    fs::write(out, payload)
        .map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}

fn construct_cat(
    doc: &Document,
    env: &Env,
    kind: &str,
    args: &[String],
    b: &mut Builder,
) -> CliResult<()> {
    match kind {
        "coproduct" => {
            let (an, bn) = (arg(args, 0)?, arg(args, 1)?);
            let a = get_cat(env, an)?;
            let bc = get_cat(env, bn)?;
            let cop = coproduct_cat(a, bc).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &cop.category)));
            let inl = b.fresh("inl");
            b.push(Block::Functor(functor_block(&inl, an, &colim, a, &cop.category, &cop.left)));
            let inr = b.fresh("inr");
            b.push(Block::Functor(functor_block(&inr, bn, &colim, bc, &cop.category, &cop.right)));
        }
        "coinserter" | "coequalizer" => {
            let (fv, gv) = parallel_functors(env, args)?;
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let (cat, proj, cells) = if kind == "coinserter" {
                let c = coinserter_cat(idx, bc, &fv.functor, &gv.functor).map_err(fail)?;
                (c.category, c.proj, vec![("cell", true, c.cell)])
            } else {
                let c = coequalizer_cat(idx, bc, &fv.functor, &gv.functor).map_err(fail)?;
                (c.category, c.proj, vec![("cell", true, c.cell), ("cellinv", false, c.cell_inverse)])
            };
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &cat)));
            let pn = b.fresh("proj");
            b.push(Block::Functor(functor_block(&pn, &fv.tgt, &colim, bc, &cat, &proj)));
            let qf = fv.functor.then(bc, &cat, &proj).map_err(fail)?;
            let qg = gv.functor.then(bc, &cat, &proj).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::Functor(functor_block(&qfn, &fv.src, &colim, idx, &cat, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::Functor(functor_block(&qgn, &fv.src, &colim, idx, &cat, &qg)));
            for (base, fwd, t) in cells {
                let name = b.fresh(base);
                let (s, g) = if fwd { (&qfn, &qgn) } else { (&qgn, &qfn) };
                b.push(Block::Transformation(transformation_block(&name, s, g, idx, &cat, &t)));
            }
        }
        "coequifier" => {
            let (av, bv) = parallel_transforms(env, args)?;
            let fv = &env.functors[&av.src];
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coequifier_cat(idx, bc, &av.transform, &bv.transform).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &c.category)));
            let pn = b.fresh("proj");
            b.push(Block::Functor(functor_block(&pn, &fv.tgt, &colim, bc, &c.category, &c.proj)));
        }
        "coinverter" => {
            let an = arg(args, 0)?;
            let av = env
                .transforms
                .get(an)
                .ok_or_else(|| usage(format!("unknown transformation `{an}`")))?;
            let fv = &env.functors[&av.src];
            let gv = &env.functors[&av.tgt];
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coinverter_cat(idx, bc, &fv.functor, &gv.functor, &av.transform)
                .map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &c.category)));
            let pn = b.fresh("proj");
            b.push(Block::Functor(functor_block(&pn, &fv.tgt, &colim, bc, &c.category, &c.proj)));
            let qf = fv.functor.then(bc, &c.category, &c.proj).map_err(fail)?;
            let qg = gv.functor.then(bc, &c.category, &c.proj).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::Functor(functor_block(&qfn, &fv.src, &colim, idx, &c.category, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::Functor(functor_block(&qgn, &fv.src, &colim, idx, &c.category, &qg)));
            let inv = b.fresh("inv");
            b.push(Block::Transformation(transformation_block(
                &inv, &qgn, &qfn, idx, &c.category, &c.inverse,
            )));
        }
        "pushout" => {
            let (fv, gv) = span_functors(env, args)?;
            let c0 = &env.cats[&fv.src];
            let a = &env.cats[&fv.tgt];
            let bc = &env.cats[&gv.tgt];
            let po = pushout_cat(c0, a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &po.category)));
            let inl = b.fresh("inl");
            b.push(Block::Functor(functor_block(&inl, &fv.tgt, &colim, a, &po.category, &po.left)));
            let inr = b.fresh("inr");
            b.push(Block::Functor(functor_block(&inr, &gv.tgt, &colim, bc, &po.category, &po.right)));
            let qf = fv.functor.then(a, &po.category, &po.left).map_err(fail)?;
            let qg = gv.functor.then(bc, &po.category, &po.right).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::Functor(functor_block(&qfn, &fv.src, &colim, c0, &po.category, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::Functor(functor_block(&qgn, &fv.src, &colim, c0, &po.category, &qg)));
            let cell = b.fresh("cell");
            b.push(Block::Transformation(transformation_block(
                &cell, &qfn, &qgn, c0, &po.category, &po.cell,
            )));
            let cinv = b.fresh("cellinv");
            b.push(Block::Transformation(transformation_block(
                &cinv, &qgn, &qfn, c0, &po.category, &po.cell_inverse,
            )));
        }
        "directed" => {
            let dn = arg(args, 0)?;
            let d = env
                .diagrams
                .get(dn)
                .ok_or_else(|| usage(format!("unknown diagram `{dn}`")))?;
            let stages = diagram_stages(doc, dn)?;
            let col = directed_colimit_cat(d).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &col.category)));
            for (i, stage) in stages.iter().enumerate() {
                let name = b.fresh(&format!("inj.{stage}"));
                b.push(Block::Functor(functor_block(
                    &name,
                    stage,
                    &colim,
                    &d.cats[i],
                    &col.category,
                    &col.injections[i],
                )));
            }
        }
        "tensor_with" => {
            let (cn, bn) = (arg(args, 0)?, arg(args, 1)?);
            let c = get_cat(env, cn)?;
            let bc = get_cat(env, bn)?;
            let tw = tensor_with_category_cat(c, bc).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::Category(category_block(&colim, &tw.category)));
            let mut at_names = Vec::new();
            for o in c.quiver.object_ids() {
                let name = b.fresh(&format!("at.{}", c.quiver.obj_name(o)));
                b.push(Block::Functor(functor_block(
                    &name,
                    bn,
                    &colim,
                    bc,
                    &tw.category,
                    &tw.at_obj[o.idx()],
                )));
                at_names.push(name);
            }
            for u in c.quiver.arrow_ids() {
                let name = b.fresh(&format!("gen.{}", c.quiver.arrow_name(u)));
                let s = c.quiver.src(u).idx();
                let t = c.quiver.tgt(u).idx();
                b.push(Block::Transformation(transformation_block(
                    &name,
                    &at_names[s],
                    &at_names[t],
                    bc,
                    &tw.category,
                    &tw.at_gen[u.idx()],
                )));
            }
        }
        other => return Err(usage(format!("unknown construction kind `{other}`"))),
    }
    Ok(())
}

fn construct_tensor(
    doc: &Document,
    env: &Env,
    kind: &str,
    args: &[String],
    b: &mut Builder,
) -> CliResult<()> {
    match kind {
        "coproduct" => {
            let (an, bn) = (arg(args, 0)?, arg(args, 1)?);
            let a = get_tcat(env, an)?;
            let bc = get_tcat(env, bn)?;
            let cop = coproduct_tensor(a, bc).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &cop.category)));
            let inl = b.fresh("inl");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &inl, an, &colim, a, &cop.category, &cop.left,
            )));
            let inr = b.fresh("inr");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &inr, bn, &colim, bc, &cop.category, &cop.right,
            )));
        }
        "coinserter" | "coequalizer" => {
            let (fv, gv) = parallel_tensor_functors(env, args)?;
            let a = &env.tcats[&fv.src];
            let bc = &env.tcats[&fv.tgt];
            let (cat, proj, cells) = if kind == "coinserter" {
                let c = coinserter_tensor(a, bc, &fv.functor, &gv.functor).map_err(fail)?;
                (c.category, c.proj, vec![("cell", true, c.cell)])
            } else {
                let c = coequalizer_tensor(a, bc, &fv.functor, &gv.functor).map_err(fail)?;
                (c.category, c.proj, vec![("cell", true, c.cell), ("cellinv", false, c.cell_inverse)])
            };
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &cat)));
            let pn = b.fresh("proj");
            b.push(Block::TensorFunctor(tensor_functor_block(&pn, &fv.tgt, &colim, bc, &cat, &proj)));
            let qf = fv.functor.then(a, bc, &cat, &proj).map_err(fail)?;
            let qg = gv.functor.then(a, bc, &cat, &proj).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::TensorFunctor(tensor_functor_block(&qfn, &fv.src, &colim, a, &cat, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::TensorFunctor(tensor_functor_block(&qgn, &fv.src, &colim, a, &cat, &qg)));
            for (base, fwd, t) in cells {
                let name = b.fresh(base);
                let (s, g) = if fwd { (&qfn, &qgn) } else { (&qgn, &qfn) };
                b.push(Block::TensorTransformation(tensor_transformation_block(
                    &name, s, g, a, &cat, &t,
                )));
            }
        }
        "coequifier" => {
            let an = arg(args, 0)?;
            let bn = arg(args, 1)?;
            let av = env
                .ttransforms
                .get(an)
                .ok_or_else(|| usage(format!("unknown tensor transformation `{an}`")))?;
            let bv = env
                .ttransforms
                .get(bn)
                .ok_or_else(|| usage(format!("unknown tensor transformation `{bn}`")))?;
            let fv = &env.tfunctors[&av.src];
            let a = &env.tcats[&fv.src];
            let bc = &env.tcats[&fv.tgt];
            let c = coequifier_tensor(a, bc, &av.transform, &bv.transform).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &c.category)));
            let pn = b.fresh("proj");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &pn, &fv.tgt, &colim, bc, &c.category, &c.proj,
            )));
        }
        "coinverter" => {
            let an = arg(args, 0)?;
            let av = env
                .ttransforms
                .get(an)
                .ok_or_else(|| usage(format!("unknown tensor transformation `{an}`")))?;
            let fv = &env.tfunctors[&av.src];
            let gv = &env.tfunctors[&av.tgt];
            let a = &env.tcats[&fv.src];
            let bc = &env.tcats[&fv.tgt];
            let c = coinverter_tensor(a, bc, &fv.functor, &gv.functor, &av.transform)
                .map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &c.category)));
            let pn = b.fresh("proj");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &pn, &fv.tgt, &colim, bc, &c.category, &c.proj,
            )));
            let qf = fv.functor.then(a, bc, &c.category, &c.proj).map_err(fail)?;
            let qg = gv.functor.then(a, bc, &c.category, &c.proj).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::TensorFunctor(tensor_functor_block(&qfn, &fv.src, &colim, a, &c.category, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::TensorFunctor(tensor_functor_block(&qgn, &fv.src, &colim, a, &c.category, &qg)));
            let inv = b.fresh("inv");
            b.push(Block::TensorTransformation(tensor_transformation_block(
                &inv, &qgn, &qfn, a, &c.category, &c.inverse,
            )));
        }
        "pushout" => {
            let (fv, gv) = span_tensor_functors(env, args)?;
            let c0 = &env.tcats[&fv.src];
            let a = &env.tcats[&fv.tgt];
            let bc = &env.tcats[&gv.tgt];
            let po = pushout_tensor(c0, a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &po.category)));
            let inl = b.fresh("inl");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &inl, &fv.tgt, &colim, a, &po.category, &po.left,
            )));
            let inr = b.fresh("inr");
            b.push(Block::TensorFunctor(tensor_functor_block(
                &inr, &gv.tgt, &colim, bc, &po.category, &po.right,
            )));
            let qf = fv.functor.then(c0, a, &po.category, &po.left).map_err(fail)?;
            let qg = gv.functor.then(c0, bc, &po.category, &po.right).map_err(fail)?;
            let qfn = b.fresh("qf");
            b.push(Block::TensorFunctor(tensor_functor_block(&qfn, &fv.src, &colim, c0, &po.category, &qf)));
            let qgn = b.fresh("qg");
            b.push(Block::TensorFunctor(tensor_functor_block(&qgn, &fv.src, &colim, c0, &po.category, &qg)));
            let cell = b.fresh("cell");
            b.push(Block::TensorTransformation(tensor_transformation_block(
                &cell, &qfn, &qgn, c0, &po.category, &po.cell,
            )));
            let cinv = b.fresh("cellinv");
            b.push(Block::TensorTransformation(tensor_transformation_block(
                &cinv, &qgn, &qfn, c0, &po.category, &po.cell_inverse,
            )));
        }
        "directed" => {
            let dn = arg(args, 0)?;
            let d = env
                .tdiagrams
                .get(dn)
                .ok_or_else(|| usage(format!("unknown tensor diagram `{dn}`")))?;
            let stages = diagram_stages(doc, dn)?;
            let col = directed_colimit_tensor(d).map_err(fail)?;
            let colim = b.fresh("colim");
            b.push(Block::TensorCategory(tensor_category_block(&colim, &col.category)));
            for (i, stage) in stages.iter().enumerate() {
                let name = b.fresh(&format!("inj.{stage}"));
                b.push(Block::TensorFunctor(tensor_functor_block(
                    &name,
                    stage,
                    &colim,
                    &d.cats[i],
                    &col.category,
                    &col.injections[i],
                )));
            }
        }
        other => {
            return Err(usage(format!(
                "construction kind `{other}` is not available for tensor categories"
            )))
        }
    }
    Ok(())
}

fn diagram_stages(doc: &Document, name: &str) -> CliResult<Vec<String>> {
    for b in &doc.blocks {
        if let Block::Diagram(d) = b {
            if d.name == name {
                return Ok(d.stages.clone());
            }
        }
    }
    Err(usage(format!("diagram block `{name}` not found")))
}

fn parallel_functors<'a>(
    env: &'a Env,
    args: &[String],
) -> CliResult<(&'a bicolim::dsl::resolve::FunctorVal, &'a bicolim::dsl::resolve::FunctorVal)> {
    let fv = env
        .functors
        .get(arg(args, 0)?)
        .ok_or_else(|| usage(format!("unknown functor `{}`", args[0])))?;
    let gv = env
        .functors
        .get(arg(args, 1)?)
        .ok_or_else(|| usage(format!("unknown functor `{}`", args[1])))?;
    if fv.src != gv.src || fv.tgt != gv.tgt {
        return Err(Failure { code: 1, msg: "functors are not parallel".into() });
    }
    Ok((fv, gv))
}

fn span_functors<'a>(
    env: &'a Env,
    args: &[String],
) -> CliResult<(&'a bicolim::dsl::resolve::FunctorVal, &'a bicolim::dsl::resolve::FunctorVal)> {
    let fv = env
        .functors
        .get(arg(args, 0)?)
        .ok_or_else(|| usage(format!("unknown functor `{}`", args[0])))?;
    let gv = env
        .functors
        .get(arg(args, 1)?)
        .ok_or_else(|| usage(format!("unknown functor `{}`", args[1])))?;
    if fv.src != gv.src {
        return Err(Failure { code: 1, msg: "span functors have different sources".into() });
    }
    Ok((fv, gv))
}

fn parallel_tensor_functors<'a>(
    env: &'a Env,
    args: &[String],
) -> CliResult<(
    &'a bicolim::dsl::resolve::TensorFunctorVal,
    &'a bicolim::dsl::resolve::TensorFunctorVal,
)> {
    let fv = env
        .tfunctors
        .get(arg(args, 0)?)
        .ok_or_else(|| usage(format!("unknown tensor functor `{}`", args[0])))?;
    let gv = env
        .tfunctors
        .get(arg(args, 1)?)
        .ok_or_else(|| usage(format!("unknown tensor functor `{}`", args[1])))?;
    if fv.src != gv.src || fv.tgt != gv.tgt {
        return Err(Failure { code: 1, msg: "tensor functors are not parallel".into() });
    }
    Ok((fv, gv))
}

fn span_tensor_functors<'a>(
    env: &'a Env,
    args: &[String],
) -> CliResult<(
    &'a bicolim::dsl::resolve::TensorFunctorVal,
    &'a bicolim::dsl::resolve::TensorFunctorVal,
)> {
    let fv = env
        .tfunctors
        .get(arg(args, 0)?)
        .ok_or_else(|| usage(format!("unknown tensor functor `{}`", args[0])))?;
    let gv = env
        .tfunctors
        .get(arg(args, 1)?)
        .ok_or_else(|| usage(format!("unknown tensor functor `{}`", args[1])))?;
    if fv.src != gv.src {
        return Err(Failure { code: 1, msg: "span tensor functors have different sources".into() });
    }
    Ok((fv, gv))
}

fn parallel_transforms<'a>(
    env: &'a Env,
    args: &[String],
) -> CliResult<(
    &'a bicolim::dsl::resolve::TransformVal,
    &'a bicolim::dsl::resolve::TransformVal,
)> {
    let av = env
        .transforms
        .get(arg(args, 0)?)
        .ok_or_else(|| usage(format!("unknown transformation `{}`", args[0])))?;
    let bv = env
        .transforms
        .get(arg(args, 1)?)
        .ok_or_else(|| usage(format!("unknown transformation `{}`", args[1])))?;
    if av.src != bv.src || av.tgt != bv.tgt {
        return Err(Failure { code: 1, msg: "2-cells are not parallel".into() });
    }
    Ok((av, bv))
}

fn cmd_check_universal(
    bounds: Bounds,
    export: Export,
    construction: &PathBuf,
    test: &PathBuf,
) -> CliResult<()> {
    let (_doc, env) = read_doc(construction, bounds)?;
    let cb = env
        .constructions
        .first()
        .cloned()
        .ok_or_else(|| usage("no construction block in the construction file"))?;
    let (test_doc, test_env) = read_doc(test, bounds)?;
    let limit = bounds.max_hom;
    let report = match cb.category.as_str() {
        "cat" => {
            let t = first_category(&test_doc, &test_env)?;
            check_cat(&env, &cb, t, limit)?
        }
        "tensor" => {
            let t = first_tensor_category(&test_doc, &test_env)?;
            check_tensor(&env, &cb, t, limit)?
        }
        other => return Err(usage(format!("unknown category flavor `{other}`"))),
    };
    match export {
        Export::Dsl => {
            println!("kind: {}", report.kind);
            println!("essentially_surjective: {}", report.essentially_surjective);
            println!("fully_faithful: {}", report.fully_faithful);
            println!("colimit_side_objects: {}", report.colimit_side_objects);
            println!("data_side_objects: {}", report.data_side_objects);
            println!("unknown_incidents: {}", report.unknown_incidents);
            if let Some(f) = &report.failure {
                println!("failure: {f}");
            }
            println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
        }
        Export::Records => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure { code: 1, msg: e.to_string() })?
            );
        }
    }
    if report.passed() {
        Ok(())
    } else if report.unknown_incidents > 0 {
        Err(Failure { code: 2, msg: String::new() })
    } else {
        Err(Failure { code: 1, msg: String::new() })
    }
}

fn first_category<'a>(doc: &Document, env: &'a Env) -> CliResult<&'a FpCategory> {
    for b in &doc.blocks {
        if let Block::Category(c) = b {
            return Ok(&env.cats[&c.name]);
        }
    }
    Err(usage("no category block in the test file"))
}

fn first_tensor_category<'a>(
    doc: &Document,
    env: &'a Env,
) -> CliResult<&'a bicolim::tensor::category::TensorCategory> {
    for b in &doc.blocks {
        if let Block::TensorCategory(c) = b {
            return Ok(&env.tcats[&c.name]);
        }
    }
    Err(usage("no tensor category block in the test file"))
}

fn check_cat(
    env: &Env,
    cb: &ConstructionBlock,
    t: &FpCategory,
    limit: usize,
) -> CliResult<UPReport> {
    match cb.kind.as_str() {
        "coproduct" => {
            let a = get_cat(env, arg(&cb.args, 0)?)?;
            let bc = get_cat(env, arg(&cb.args, 1)?)?;
            let cop = coproduct_cat(a, bc).map_err(fail)?;
            verify_coproduct_cat(a, bc, &cop, t, limit).map_err(fail)
        }
        "coinserter" => {
            let (fv, gv) = parallel_functors(env, &cb.args)?;
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coinserter_cat(idx, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_coinserter_cat(idx, bc, &fv.functor, &gv.functor, &c, t, limit).map_err(fail)
        }
        "coequalizer" => {
            let (fv, gv) = parallel_functors(env, &cb.args)?;
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coequalizer_cat(idx, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_coequalizer_cat(idx, bc, &fv.functor, &gv.functor, &c, t, limit).map_err(fail)
        }
        "coequifier" => {
            let (av, bv) = parallel_transforms(env, &cb.args)?;
            let fv = &env.functors[&av.src];
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coequifier_cat(idx, bc, &av.transform, &bv.transform).map_err(fail)?;
            verify_coequifier_cat(idx, bc, &av.transform, &bv.transform, &c, t, limit)
                .map_err(fail)
        }
        "coinverter" => {
            let an = arg(&cb.args, 0)?;
            let av = env
                .transforms
                .get(an)
                .ok_or_else(|| usage(format!("unknown transformation `{an}`")))?;
            let fv = &env.functors[&av.src];
            let gv = &env.functors[&av.tgt];
            let idx = &env.cats[&fv.src];
            let bc = &env.cats[&fv.tgt];
            let c = coinverter_cat(idx, bc, &fv.functor, &gv.functor, &av.transform)
                .map_err(fail)?;
            verify_coinverter_cat(idx, bc, &av.transform, &c, t, limit).map_err(fail)
        }
        "pushout" => {
            let (fv, gv) = span_functors(env, &cb.args)?;
            let c0 = &env.cats[&fv.src];
            let a = &env.cats[&fv.tgt];
            let bc = &env.cats[&gv.tgt];
            let po = pushout_cat(c0, a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_pushout_cat(c0, a, bc, &fv.functor, &gv.functor, &po, t, limit).map_err(fail)
        }
        other => Err(usage(format!(
            "check-universal does not support construction kind `{other}`"
        ))),
    }
}

fn check_tensor(
    env: &Env,
    cb: &ConstructionBlock,
    t: &bicolim::tensor::category::TensorCategory,
    limit: usize,
) -> CliResult<UPReport> {
    match cb.kind.as_str() {
        "coproduct" => {
            let a = get_tcat(env, arg(&cb.args, 0)?)?;
            let bc = get_tcat(env, arg(&cb.args, 1)?)?;
            let cop = coproduct_tensor(a, bc).map_err(fail)?;
            verify_coproduct_tensor(a, bc, &cop, t, limit).map_err(fail)
        }
        "coinserter" => {
            let (fv, gv) = parallel_tensor_functors(env, &cb.args)?;
            let a = &env.tcats[&fv.src];
            let bc = &env.tcats[&fv.tgt];
            let c = coinserter_tensor(a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_coinserter_tensor(a, bc, &fv.functor, &gv.functor, &c, t, limit).map_err(fail)
        }
        "coequalizer" => {
            let (fv, gv) = parallel_tensor_functors(env, &cb.args)?;
            let a = &env.tcats[&fv.src];
            let bc = &env.tcats[&fv.tgt];
            let c = coequalizer_tensor(a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_coequalizer_tensor(a, bc, &fv.functor, &gv.functor, &c, t, limit)
                .map_err(fail)
        }
        "pushout" => {
            let (fv, gv) = span_tensor_functors(env, &cb.args)?;
            let c0 = &env.tcats[&fv.src];
            let a = &env.tcats[&fv.tgt];
            let bc = &env.tcats[&gv.tgt];
            let po = pushout_tensor(c0, a, bc, &fv.functor, &gv.functor).map_err(fail)?;
            verify_pushout_tensor(c0, a, bc, &fv.functor, &gv.functor, &po, t, limit)
                .map_err(fail)
        }
        other => Err(usage(format!(
            "check-universal does not support tensor construction kind `{other}`"
        ))),
    }
}

fn cmd_pi0(bounds: Bounds, export: Export, input: &PathBuf) -> CliResult<()> {
    let (doc, env) = read_doc(input, bounds)?;
    for b in &doc.blocks {
        match b {
            Block::Category(cb) => {
                let c = &env.cats[&cb.name];
                let comps = c.pi0();
                match export {
                    Export::Dsl => {
                        for (i, comp) in comps.iter().enumerate() {
                            let names: Vec<&str> =
                                comp.iter().map(|&o| c.quiver.obj_name(o)).collect();
                            println!("component {i}: {}", names.join(", "));
                        }
                    }
                    Export::Records => {
                        let val: Vec<Vec<&str>> = comps
                            .iter()
                            .map(|comp| {
                                comp.iter().map(|&o| c.quiver.obj_name(o)).collect()
                            })
                            .collect();
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&val)
                                .map_err(|e| Failure { code: 1, msg: e.to_string() })?
                        );
                    }
                }
                return Ok(());
            }
            Block::TensorCategory(cb) => {
                let t = &env.tcats[&cb.name];
                let m = pi0_tensor(t).map_err(fail)?;
                match export {
                    Export::Dsl => {
                        println!("elements: {}", m.elems.join(", "));
                        println!("unit: {}", m.elems[m.unit]);
                        for a in 0..m.len() {
                            for b2 in 0..m.len() {
                                if a == m.unit || b2 == m.unit {
                                    continue;
                                }
                                println!(
                                    "{} * {} = {}",
                                    m.elems[a],
                                    m.elems[b2],
                                    m.elems[m.prod(a, b2)]
                                );
                            }
                        }
                    }
                    Export::Records => {
                        let val = serde_json::json!({
                            "elements": m.elems,
                            "unit": m.unit,
                            "table": m.table,
                        });
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&val)
                                .map_err(|e| Failure { code: 1, msg: e.to_string() })?
                        );
                    }
                }
                return Ok(());
            }
            _ => {}
        }
    }
    Err(usage("no category block in the input file"))
}

fn first_carrier<'a>(doc: &Document, env: &'a Env) -> CliResult<&'a FpCategory> {
    for b in &doc.blocks {
        match b {
            Block::Category(cb) => return Ok(&env.cats[&cb.name]),
            Block::TensorCategory(cb) => return Ok(&env.tcats[&cb.name].carrier),
            _ => {}
        }
    }
    Err(usage("no category block in the input file"))
}

fn cmd_hom(bounds: Bounds, input: &PathBuf, src: &str, dst: &str) -> CliResult<()> {
    let (doc, env) = read_doc(input, bounds)?;
    let c = first_carrier(&doc, &env)?;
    let s = c.quiver.obj(src).map_err(|e| usage(e.to_string()))?;
    let t = c.quiver.obj(dst).map_err(|e| usage(e.to_string()))?;
    let mut homs = c.hom(s, t).map_err(fail)?;
    homs.sort_by_key(|p| (p.arrows.len(), p.arrows.clone()));
    for p in &homs {
        println!("{}", p.display(&c.quiver));
    }
    Ok(())
}

fn cmd_normalize(bounds: Bounds, input: &PathBuf, term: &str) -> CliResult<()> {
    let (doc, env) = read_doc(input, bounds)?;
    let c = first_carrier(&doc, &env)?;
    let p = parse_path(c, term).map_err(|e| usage(e.to_string()))?;
    println!("{}", c.normalize(&p).display(&c.quiver));
    Ok(())
}
