//! Subcommand implementations. Each returns an [`Output`] or a [`CliError`].

use serde_json::{json, Value};
use specht_core::checks::{
    dimension_suite, expansion_suite, gate_suite, hook_weight_suite, lemma_4core_suite,
    Counterexample,
};
use specht_core::modrep::{
    class_bounds, realize, sweep, EModule, ElementaryAbelianSubgroup, PointRecord,
};
use specht_core::vertex::{
    classify, complexity_bounds, ComplexityInterval, SpechtContext, VertexReport,
};
use specht_core::{
    hook_product, m_core_weight, max_elem_abelian_classes, p_adic_expansion, partitions, rho,
    specht_dimension, Partition, Prime,
};

use crate::config::{Filters, RunConfig, Suite};
use crate::literal::render;
use crate::report::{object, Output};
use crate::CliError;

const INFO_PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn info(mu: &Partition, cfg: &RunConfig) -> Output {
    let primes: Vec<Prime> = match cfg.p {
        Some(p) => vec![p],
        None => INFO_PRIMES.iter().map(|&q| Prime::new(q).expect("prime")).collect(),
    };
    let dim = specht_dimension(mu);
    let regular = primes
        .iter()
        .map(|p| (p.to_string(), json!(mu.is_p_regular(*p))))
        .collect();
    let p_parts = primes
        .iter()
        .map(|p| (p.to_string(), json!(dim.p_part(*p).to_string())))
        .collect();
    Output::Record(object(vec![
        ("mu", json!(mu)),
        ("literal", json!(render(mu))),
        ("size", json!(mu.size())),
        ("length", json!(mu.len())),
        ("hooks", json!(mu.hook_grid().rows())),
        ("hook_product", json!(hook_product(mu).to_string())),
        ("dimension", json!(dim.to_biguint().to_string())),
        ("dimension_factored", json!(dim.to_string())),
        ("p_regular", Value::Object(regular)),
        ("dimension_p_part", Value::Object(p_parts)),
    ]))
}

pub fn core(mu: &Partition, cfg: &RunConfig) -> Result<Output, CliError> {
    let m = cfg.modulus.ok_or_else(|| CliError::Usage("core needs -m".into()))?;
    let cw = m_core_weight(mu, m)?;
    Ok(Output::Record(object(vec![
        ("mu", json!(mu)),
        ("m", json!(cw.m)),
        ("core", json!(cw.core)),
        ("weight", json!(cw.weight)),
    ])))
}

pub fn expand(mu: &Partition, cfg: &RunConfig) -> Result<Output, CliError> {
    let p = cfg.require_p()?;
    let exp = p_adic_expansion(mu, p);
    let r = rho(mu, p);
    Ok(Output::Record(object(vec![
        ("mu", json!(mu)),
        ("p", json!(p)),
        ("layers", json!(exp.layers)),
        ("rho", json!(r.parts)),
        ("rho_blocks", json!(r.blocks())),
    ])))
}

pub fn context(mu: &Partition, cfg: &RunConfig) -> Result<SpechtContext, CliError> {
    let p = cfg.require_p()?;
    let mut ctx = SpechtContext::new(mu.clone(), p)
        .simple(cfg.simple)
        .abelian_vertex(cfg.assume_abelian);
    if cfg.indecomposable {
        ctx = ctx.indecomposable(true);
    }
    Ok(ctx)
}

pub fn classify_report(mu: &Partition, cfg: &RunConfig) -> Result<VertexReport, CliError> {
    let ctx = context(mu, cfg)?;
    let mut report = classify(&ctx);
    report.complexity = complexity_bounds(&ctx);
    Ok(report)
}

pub fn classify_cmd(mu: &Partition, cfg: &RunConfig) -> Result<Output, CliError> {
    Ok(Output::record(&classify_report(mu, cfg)?))
}

pub fn enumerate(n: usize, filters: &Filters, cfg: &RunConfig) -> Result<Output, CliError> {
    let p = cfg.require_p()?;
    let q = p.get() as usize;
    let two = Prime::new(2).expect("prime");
    let rows = partitions(n)
        .filter(|mu| !filters.two_regular || mu.is_p_regular(two))
        .filter(|mu| !filters.four_core || mu.is_core(4))
        .filter(|mu| !filters.p2_core || mu.is_core(q * q))
        .filter(|mu| !filters.pxp || mu.is_pxp(p))
        .map(|mu| {
            let cw = m_core_weight(&mu, q).expect("p >= 2");
            object(vec![
                ("mu", json!(mu)),
                ("literal", json!(render(&mu))),
                ("p_core", json!(cw.core)),
                ("p_weight", json!(cw.weight)),
                ("p_regular", json!(mu.is_p_regular(p))),
            ])
        })
        .collect();
    Ok(Output::Records(rows))
}

pub fn verify(suite: Suite, cfg: &RunConfig) -> Output {
    let max_n = cfg.max_n.unwrap_or(suite.default_max_n());
    let default_primes: Vec<Prime> = [2, 3, 5].iter().map(|&q| Prime::new(q).expect("prime")).collect();
    let primes = cfg.p.map_or(default_primes, |p| vec![p]);
    let (parameters, bad): (Vec<u64>, Vec<Counterexample>) = match suite {
        Suite::HookWeight => {
            let moduli: Vec<usize> = cfg.modulus.map_or((2..=9).collect(), |m| vec![m]);
            let params = moduli.iter().map(|&m| m as u64).collect();
            (params, hook_weight_suite(max_n, &moduli))
        }
        Suite::Lemma4Core => (vec![2], lemma_4core_suite(max_n)),
        Suite::DimOracle => (Vec::new(), dimension_suite(max_n)),
        Suite::Expansion => (primes.iter().map(|p| p.get()).collect(), expansion_suite(max_n, &primes)),
        Suite::Gate => (primes.iter().map(|p| p.get()).collect(), gate_suite(max_n, &primes)),
    };
    let mut bad = bad;
    bad.sort_by(|a, b| (a.mu.size(), &a.mu, a.parameter).cmp(&(b.mu.size(), &b.mu, b.parameter)));
    let examples: Vec<String> = bad
        .iter()
        .take(10)
        .map(|c| format!("{} [{}]: {}", c.mu, c.parameter, c.detail))
        .collect();
    Output::Record(object(vec![
        ("suite", json!(suite.name())),
        ("max_n", json!(max_n)),
        ("parameters", json!(parameters)),
        ("violations", json!(bad.len())),
        ("passed", json!(bad.is_empty())),
        ("examples", json!(examples)),
    ]))
}

pub struct SweepResult {
    pub p: Prime,
    pub records: Vec<PointRecord>,
}

pub fn sweep_cmd(mu: &Partition, spec: &str, cfg: &RunConfig) -> Result<SweepResult, CliError> {
    let p = cfg.require_p()?;
    let group = ElementaryAbelianSubgroup::parse_spec(spec, p, mu.size())?;
    let r = realize(mu, p, cfg.extension, &cfg.budgets)?;
    let module = EModule::restrict(&r, &group)?;
    let records = sweep(&module, cfg.budgets.sweep_points)?;
    Ok(SweepResult { p, records })
}

impl SweepResult {
    pub fn output(&self) -> Output {
        let rows = self
            .records
            .iter()
            .map(|r| {
                let alpha: Vec<String> = r.alpha.iter().map(ToString::to_string).collect();
                let mut pairs = vec![("alpha".to_string(), json!(alpha.join(";")))];
                for (j, b) in r.profile.blocks().iter().enumerate() {
                    pairs.push((format!("b{}", j + 1), json!(b)));
                }
                pairs.push(("projective".into(), json!(r.is_projective())));
                Value::Object(pairs.into_iter().collect())
            })
            .collect();
        Output::Records(rows)
    }
}

/// Classifier interval merged with the certified lower bound from sweeps.
pub fn bound(mu: &Partition, cfg: &RunConfig) -> Result<(Output, bool), CliError> {
    let report = classify_report(mu, cfg)?;
    let p = report.p;
    let classes = max_elem_abelian_classes(mu.size(), p);
    let bounds = class_bounds(mu, p, &classes, cfg.extension, &cfg.budgets)?;
    let lower = bounds.iter().map(|b| b.bound).max().unwrap_or(0);
    let iv = report.complexity;
    let consistent = lower <= iv.hi;
    let merged = if consistent {
        json!(ComplexityInterval::new(iv.lo.max(lower), iv.hi))
    } else {
        Value::Null
    };
    let class_rows: Vec<Value> = bounds
        .iter()
        .map(|b| {
            object(vec![
                ("class", json!(b.class.group_description())),
                ("i", json!(b.class.coefficients())),
                ("rank", json!(b.rank)),
                ("points", json!(b.points.to_string())),
                ("non_projective", json!(b.non_projective)),
                ("bound", json!(b.bound)),
            ])
        })
        .collect();
    let out = Output::Record(object(vec![
        ("mu", json!(mu)),
        ("p", json!(p)),
        ("e", json!(cfg.extension)),
        ("weight", json!(report.block.weight)),
        ("classifier", json!(iv)),
        ("lower_bound", json!(lower)),
        ("complexity", merged),
        ("consistent", json!(consistent)),
        ("classes", Value::Array(class_rows)),
    ]));
    Ok((out, consistent))
}

