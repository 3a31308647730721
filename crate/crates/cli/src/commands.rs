use std::fs;
use std::path::{Path, PathBuf};

use ordalg::algebra::first_table_difference;
use ordalg::congruence::{maltsev_report, term_witness_check, TermScheme};
use ordalg::implication::{
    check_ncis_properties, derive_implication, derive_sections, validate_ncis, NcisAlgebra,
};
use ordalg::order::validate_join_semilattice;
use ordalg::residuated::{
    check_rrs_properties, ncis_rrs_bridge, rrs_from_srs, srs_from_rrs, validate_rrs, validate_srs,
    BridgeDirection, RrsAlgebra, SrsAlgebra,
};
use ordalg::search::{
    count_models, enumerate_models, find_counterexample, Property, SearchSpec, MAX_SIZE,
};
use ordalg::sectioned::{
    section_shape_report, validate_sectioned, SectionedAlgebra, SublatticeKind,
};
use ordalg::varieties::{
    check_r_diagonal, ialgebra_from_ncis, ncis_from_ialgebra, ralgebra_from_rrs, rrs_from_ralgebra,
    validate_ialgebra, validate_ralgebra, IAlgebra, RAlgebra,
};
use ordalg::{
    parse_algebra, parse_algebra_lenient, render_tables, serialize, Algebra, ClassTag, Error, Op,
    Report, Violation,
};

use crate::{MapName, Pair};

pub enum Failure {
    /// A law failed; `fail_line` goes to stdout.
    Check { fail_line: String, detail: String },
    /// Already reported on stdout.
    Mismatch,
    /// Unreadable input or bad usage.
    Input(String),
}

type Outcome = Result<(), Failure>;

fn violation(alg: &Algebra, v: &Violation) -> Failure {
    Failure::Check {
        fail_line: v.fail_line(alg),
        detail: format!("law {} fails: {}", v.law, v.detail),
    }
}

fn require(alg: &Algebra, report: Report) -> Outcome {
    match report {
        Report::Pass => Ok(()),
        Report::Fail(v) => Err(violation(alg, &v)),
    }
}

/// Maps a library error on `alg` to a check failure or an input error.
fn failure(alg: &Algebra, e: Error) -> Failure {
    let labels = |w: &[usize]| {
        w.iter()
            .map(|&e| alg.label(e))
            .collect::<Vec<_>>()
            .join(",")
    };
    match e {
        Error::Violation(v) => violation(alg, &v),
        Error::NotWellDefined { op, ref witness } => Failure::Check {
            fail_line: format!(
                "FAIL axiom=well-defined-{op} witness=({}) lhs=- rhs=-",
                labels(witness)
            ),
            detail: e.to_string(),
        },
        Error::IncompatibleFamily { ref witness } => Failure::Check {
            fail_line: format!(
                "FAIL axiom=compatibility witness=({}) lhs=- rhs=-",
                labels(witness)
            ),
            detail: e.to_string(),
        },
        other => Failure::Input(other.to_string()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    parse_algebra(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn check(path: &Path, class: ClassTag, props: bool, subvariety: bool) -> Outcome {
    let alg = parse_algebra_lenient(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    require(&alg, validate_join_semilattice(&alg))?;
    let fail = |e| failure(&alg, e);
    match class {
        ClassTag::Jsl => {}
        ClassTag::Sectioned => {
            require(&alg, validate_sectioned(&alg))?;
            if props {
                for base in alg.elements() {
                    let shape = section_shape_report(&alg, base).map_err(fail)?;
                    print_shape(&alg, base, &shape);
                }
            }
        }
        ClassTag::Ncis => {
            let alg = if alg.meet_table().is_none() {
                alg.clone().with_computed_meet().map_err(fail)?
            } else {
                alg.clone()
            };
            require(&alg, validate_ncis(&alg))?;
            if props {
                let ncis = NcisAlgebra::new(alg.clone()).map_err(|e| failure(&alg, e))?;
                require(&alg, check_ncis_properties(&ncis))?;
            }
        }
        ClassTag::Srs => {
            let srs = SrsAlgebra::from_restriction(&alg).map_err(fail)?;
            require(&alg, validate_srs(&srs))?;
        }
        ClassTag::Rrs => {
            require(&alg, validate_rrs(&alg))?;
            if props {
                let rrs = RrsAlgebra::new(alg.clone()).map_err(fail)?;
                require(&alg, check_rrs_properties(&rrs))?;
            }
        }
        ClassTag::Ialg => {
            require(&alg, validate_ialgebra(&alg))?;
            if props {
                let ia = IAlgebra::new(alg.clone()).map_err(fail)?;
                require(&alg, check_r_diagonal(&ia))?;
                require(&alg, term_witness_check(&alg, &TermScheme::ALL))?;
            }
        }
        ClassTag::Ralg => {
            require(&alg, validate_ralgebra(&alg, subvariety))?;
            if props {
                let schemes: &[TermScheme] = if subvariety {
                    &TermScheme::ALL
                } else {
                    &[TermScheme::Jonsson, TermScheme::WeakRegularity]
                };
                require(&alg, term_witness_check(&alg, schemes))?;
            }
        }
    }
    println!("PASS");
    Ok(())
}

fn print_shape(alg: &Algebra, base: usize, shape: &ordalg::sectioned::ShapeReport) {
    let mut line = format!(
        "section {}: distributive={} modular={}",
        alg.label(base),
        shape.distributive,
        shape.modular
    );
    if let Some((kind, w)) = shape.witness {
        let name = match kind {
            SublatticeKind::Pentagon => "pentagon",
            SublatticeKind::Diamond => "diamond",
        };
        let labels: Vec<&str> = w.iter().map(|&e| alg.label(e)).collect();
        line.push_str(&format!(" {name}=({})", labels.join(",")));
    }
    println!("{line}");
}

fn apply(alg: Algebra, map: MapName) -> Result<Algebra, Error> {
    Ok(match map {
        MapName::I => derive_implication(&SectionedAlgebra::from_algebra(alg)?)?.into_algebra(),
        MapName::S if alg.prod_table().is_some() => {
            let rrs = RrsAlgebra::new(alg)?;
            srs_from_rrs(&rrs)?;
            rrs.into_algebra().with_class(ClassTag::Srs)
        }
        MapName::S => derive_sections(&NcisAlgebra::new(alg)?)?.into_algebra(),
        MapName::R => {
            let srs = SrsAlgebra::from_restriction(&alg)?;
            validate_srs(&srs).into_result()?;
            rrs_from_srs(&srs)?.into_algebra()
        }
        MapName::A => ialgebra_from_ncis(&NcisAlgebra::new(alg)?)?.into_algebra(),
        MapName::J => ncis_from_ialgebra(&IAlgebra::new(alg)?)?.into_algebra(),
        MapName::B => ralgebra_from_rrs(&RrsAlgebra::new(alg)?)?.into_algebra(),
        MapName::Q => rrs_from_ralgebra(&RAlgebra::new(alg)?)?.into_algebra(),
        MapName::N => {
            let (direction, class) = if alg.prod_table().is_some() {
                (BridgeDirection::ToNcis, ClassTag::Ncis)
            } else {
                (BridgeDirection::ToRrs, ClassTag::Rrs)
            };
            ncis_rrs_bridge(&alg, direction)?.algebra.with_class(class)
        }
    })
}

pub fn derive(path: &Path, map: MapName) -> Outcome {
    let alg = load(path)?;
    let out = apply(alg.clone(), map).map_err(|e| failure(&alg, e))?;
    print!("{}", serialize(&out));
    Ok(())
}

/// Both ends of a round trip, normalised so that only the tables differ.
fn round_trip(alg: Algebra, pair: Pair) -> Result<(Algebra, Algebra), Error> {
    Ok(match pair {
        Pair::SectionedNcis if alg.imp_table().is_some() => {
            let left = NcisAlgebra::new(alg)?;
            let right = derive_implication(&derive_sections(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::SectionedNcis => {
            let left = SectionedAlgebra::from_algebra(alg)?;
            let right = derive_sections(&derive_implication(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::NcisIalg if alg.r_table().is_some() => {
            let left = IAlgebra::new(alg)?;
            let right = ialgebra_from_ncis(&ncis_from_ialgebra(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::NcisIalg => {
            let left = NcisAlgebra::new(alg)?;
            let right = ncis_from_ialgebra(&ialgebra_from_ncis(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::SrsRrs if alg.class() == Some(ClassTag::Rrs) => {
            let left = RrsAlgebra::new(alg)?;
            let right = rrs_from_srs(&srs_from_rrs(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::SrsRrs => {
            let left = SrsAlgebra::from_restriction(&alg)?;
            validate_srs(&left).into_result()?;
            let right = srs_from_rrs(&rrs_from_srs(&left)?)?;
            (family_view(&left), family_view(&right))
        }
        Pair::RrsRalg if alg.q_table().is_some() => {
            let left = RAlgebra::new(alg)?;
            let right = ralgebra_from_rrs(&rrs_from_ralgebra(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::RrsRalg => {
            let left = RrsAlgebra::new(alg)?;
            let right = rrs_from_ralgebra(&ralgebra_from_rrs(&left)?)?;
            (left.into_algebra(), right.into_algebra())
        }
        Pair::NcisRrs if alg.prod_table().is_some() => {
            let left = RrsAlgebra::new(alg)?.into_algebra();
            let mid = ncis_rrs_bridge(&left, BridgeDirection::ToNcis)?.algebra;
            let right = ncis_rrs_bridge(&mid, BridgeDirection::ToRrs)?.algebra;
            (left, right)
        }
        Pair::NcisRrs => {
            let left = NcisAlgebra::new(alg)?.into_algebra();
            let mid = ncis_rrs_bridge(&left, BridgeDirection::ToRrs)?.algebra;
            let right = ncis_rrs_bridge(&mid, BridgeDirection::ToNcis)?.algebra;
            (left, right)
        }
    })
}

/// An SRS as a ternary table `t(x, y, b) = x ⊙_b y`, with the top standing
/// in for cells outside the section so that any disagreement shows up.
fn family_view(srs: &SrsAlgebra) -> Algebra {
    let alg = srs.algebra();
    let n = alg.size();
    let t = ordalg::TernTable::from_fn(n, |x, y, b| srs.monoid(b).get(x, y).unwrap_or(alg.top()));
    alg.clone().with_q(t).expect("sizes agree")
}

pub fn roundtrip(path: &Path, pair: Pair) -> Outcome {
    let alg = load(path)?;
    let (left, right) = round_trip(alg.clone(), pair).map_err(|e| failure(&alg, e))?;
    match first_table_difference(&left, &right) {
        None => {
            println!("IDENTICAL");
            Ok(())
        }
        Some(diff) => {
            let mut line = diff.render(&left);
            if matches!(pair, Pair::SrsRrs) && diff.op == Op::Q {
                line = line.replacen("op=q", "op=prod", 1);
            }
            println!("{line}");
            Err(Failure::Mismatch)
        }
    }
}

pub fn con(path: &Path, full: bool) -> Outcome {
    let alg = load(path)?;
    let report = maltsev_report(&alg).map_err(|e| match e {
        Error::Precondition(msg) => Failure::Input(format!(
            "{msg} (`derive --map A` or `--map B` gives a total presentation)"
        )),
        e => failure(&alg, e),
    })?;
    let con = report.lattice.congruences();
    let pair = |(i, j): (usize, usize)| format!(" {} {}", con[i].render(&alg), con[j].render(&alg));
    println!("congruences: {}", report.congruence_count);
    println!(
        "three-permutable: {}{}",
        report.three_permutable,
        report.permutability_witness.map(pair).unwrap_or_default()
    );
    println!(
        "congruence-distributive: {}{}",
        report.con_distributive,
        report
            .distributivity_witness
            .map(|(i, j, k)| format!(
                " {} {} {}",
                con[i].render(&alg),
                con[j].render(&alg),
                con[k].render(&alg)
            ))
            .unwrap_or_default()
    );
    println!(
        "weakly-regular: {}{}",
        report.weakly_regular,
        report.regularity_witness.map(pair).unwrap_or_default()
    );
    if full {
        for p in con {
            println!("{}", p.render(&alg));
        }
    }
    Ok(())
}

pub struct SearchArgs {
    pub class: ClassTag,
    pub size: usize,
    pub upto: bool,
    pub count: bool,
    pub violate: Option<Property>,
    pub free_imp: bool,
    pub out: Option<PathBuf>,
    pub limit: Option<usize>,
    pub max_size: Option<usize>,
}

fn size_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("ORDALG_MAX_SIZE") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("ORDALG_MAX_SIZE must be a number, got `{v}`"))),
        Err(_) => Ok(MAX_SIZE),
    }
}

fn write_model(dir: &Path, alg: &Algebra) -> Result<PathBuf, Failure> {
    let name = alg.name().unwrap_or("model");
    let path = dir.join(format!("{name}.alg"));
    fs::write(&path, serialize(alg))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(path)
}

pub fn search(args: SearchArgs) -> Outcome {
    let cap = size_cap(args.max_size)?;
    if args.size > MAX_SIZE && args.size <= cap {
        eprintln!(
            "ordalg: warning: size {} is above the default cap of {MAX_SIZE}; \
             enumeration time and memory grow very quickly",
            args.size
        );
    }
    let mut spec = SearchSpec::new(args.class, args.size)
        .upto(args.upto)
        .free_imp(args.free_imp)
        .max_size(cap);
    if let Some(l) = args.limit {
        spec = spec.limit(l);
    }
    let input = |e: Error| {
        match e {
        Error::SizeCap { size, cap } => Failure::Input(format!(
            "size {size} exceeds the cap of {cap}; pass --max-size or set ORDALG_MAX_SIZE to override"
        )),
        e => Failure::Input(e.to_string()),
    }
    };
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    }
    if let Some(p) = args.violate {
        spec = spec.violate(p);
        match find_counterexample(&spec).map_err(input)? {
            None => println!("NONE"),
            Some(m) => match &args.out {
                Some(dir) => println!("{}", write_model(dir, &m)?.display()),
                None => print!("{}", serialize(&m)),
            },
        }
        return Ok(());
    }
    if args.count {
        println!("{}", count_models(&spec).map_err(input)?);
        return Ok(());
    }
    let models = enumerate_models(&spec).map_err(input)?;
    for (i, m) in models.iter().enumerate() {
        match &args.out {
            Some(dir) => println!("{}", write_model(dir, m)?.display()),
            None => {
                if i > 0 {
                    println!();
                }
                print!("{}", serialize(m));
            }
        }
    }
    Ok(())
}

pub fn tables(path: &Path) -> Outcome {
    let alg = load(path)?;
    print!("{}", render_tables(&alg));
    Ok(())
}
