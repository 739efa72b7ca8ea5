//! Benchmark harness implementing the published timing protocol: inputs
//! pre-generated before any timing, untimed warm-up passes, per-iteration
//! wall times, median statistics. The harness reproduces the protocol, not
//! anyone's device milliseconds; emitted tables carry a device label so
//! results are never confused with published numbers. Directional claims
//! (fused faster than unfused, etc.) are expected but not asserted on
//! arbitrary hosts.

use crate::cost::{analyze, CostPolicy};
use crate::graph::ModelGraph;
use crate::tensor::Tensor;
use crate::zoo;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Mutex;
use std::time::Instant;

pub trait Clock {
    fn now_ns(&mut self) -> u128;
    /// Smallest observable nonzero tick, used for the coarse-timer warning.
    fn resolution_ns(&mut self) -> u128 {
        let mut best = u128::MAX;
        for _ in 0..64 {
            let a = self.now_ns();
            let mut b = self.now_ns();
            let mut spins = 0;
            while b == a && spins < 10_000 {
                b = self.now_ns();
                spins += 1;
            }
            if b > a {
                best = best.min(b - a);
            }
        }
        if best == u128::MAX {
            1
        } else {
            best
        }
    }
}

pub struct RealClock {
    base: Instant,
}

impl RealClock {
    pub fn new() -> Self {
        RealClock { base: Instant::now() }
    }
}

impl Default for RealClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for RealClock {
    fn now_ns(&mut self) -> u128 {
        self.base.elapsed().as_nanos()
    }
}

/// Scripted clock for testing the protocol itself. Returns the scripted
/// instants in order, then keeps incrementing by one tick.
pub struct FakeClock {
    script: Vec<u128>,
    cursor: usize,
    last: u128,
    pub calls: usize,
}

impl FakeClock {
    pub fn new(script: Vec<u128>) -> Self {
        FakeClock { script, cursor: 0, last: 0, calls: 0 }
    }

    pub fn from_millis(script: &[u64]) -> Self {
        Self::new(script.iter().map(|&m| m as u128 * 1_000_000).collect())
    }
}

impl Clock for FakeClock {
    fn now_ns(&mut self) -> u128 {
        self.calls += 1;
        if self.cursor < self.script.len() {
            self.last = self.script[self.cursor];
            self.cursor += 1;
        } else {
            self.last += 1;
        }
        self.last
    }

    fn resolution_ns(&mut self) -> u128 {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchProtocol {
    pub batch: usize,
    pub iterations: usize,
    pub warmup: usize,
    pub statistic: String,
    pub threads: usize,
    pub seed: u64,
    pub resolution: usize,
}

pub const LATENCY_ITERATIONS: usize = 200;
pub const THROUGHPUT_ITERATIONS: usize = 100;
pub const THROUGHPUT_BATCH: usize = 200;
pub const DEFAULT_WARMUP: usize = 5;

impl BenchProtocol {
    pub fn latency(resolution: usize, seed: u64) -> Self {
        BenchProtocol {
            batch: 1,
            iterations: LATENCY_ITERATIONS,
            warmup: DEFAULT_WARMUP,
            statistic: "median".to_string(),
            threads: 1,
            seed,
            resolution,
        }
    }

    pub fn throughput(resolution: usize, seed: u64) -> Self {
        BenchProtocol {
            batch: THROUGHPUT_BATCH,
            iterations: THROUGHPUT_ITERATIONS,
            ..Self::latency(resolution, seed)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidSpec("iterations must be at least 1".into()));
        }
        if self.batch == 0 {
            return Err(Error::InvalidSpec("batch must be at least 1".into()));
        }
        if self.threads == 0 {
            return Err(Error::InvalidSpec("thread count must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchResult {
    pub model_id: String,
    pub raw_times_ms: Vec<f64>,
    pub median_latency_ms: f64,
    pub iqr_ms: f64,
    pub throughput_ips: f64,
    pub device_label: String,
    pub timer_warning: bool,
    pub forwards_executed: usize,
    /// Checksum over the final forward output's bits; equal checksums across
    /// runs demonstrate the measurement left the model untouched.
    pub output_checksum: u64,
    pub protocol: BenchProtocol,
}

/// Order-statistic median: even counts average the two central values.
pub fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let mut v = xs.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

fn quantile_sorted(v: &[f64], p: f64) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    let pos = p * (v.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let frac = pos - lo as f64;
    if lo + 1 < v.len() {
        v[lo] + frac * (v[lo + 1] - v[lo])
    } else {
        v[lo]
    }
}

pub fn interquartile_range(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    quantile_sorted(&v, 0.75) - quantile_sorted(&v, 0.25)
}

fn checksum_f32(data: &[f32]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for v in data {
        h ^= v.to_bits() as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

static MEASURE_LOCK: Mutex<()> = Mutex::new(());

const INPUT_POOL_CAP: usize = 4;

/// Run the timing protocol on one model. Inputs are generated before the
/// first clock read of the timed section (a small pool is cycled to bound
/// memory at large batch sizes); warm-up passes are executed untimed.
pub fn measure(
    model: &ModelGraph,
    protocol: &BenchProtocol,
    clock: &mut dyn Clock,
    device_label: &str,
) -> Result<BenchResult> {
    protocol.validate()?;
    let _guard = MEASURE_LOCK.lock().unwrap();
    let total = protocol.warmup + protocol.iterations;
    let pool = total.clamp(1, INPUT_POOL_CAP);
    let inputs: Vec<Tensor<f32>> = (0..pool)
        .map(|i| model.seeded_input(protocol.batch, protocol.resolution, protocol.seed.wrapping_add(i as u64)))
        .collect();
    let mut forwards = 0usize;
    for i in 0..protocol.warmup {
        let y = model.forward(&inputs[i % pool])?;
        forwards += 1;
        if !y.all_finite() {
            return Err(Error::NonFinite(format!(
                "{} produced non-finite output during warm-up",
                model.id
            )));
        }
    }
    let mut raw_times_ms = Vec::with_capacity(protocol.iterations);
    let mut output_checksum = 0u64;
    for i in 0..protocol.iterations {
        let x = &inputs[(protocol.warmup + i) % pool];
        let t0 = clock.now_ns();
        let y = model.forward(x)?;
        let t1 = clock.now_ns();
        forwards += 1;
        output_checksum = checksum_f32(std::hint::black_box(&y.data));
        raw_times_ms.push((t1.saturating_sub(t0)) as f64 / 1e6);
    }
    let med = median(&raw_times_ms);
    let iqr = interquartile_range(&raw_times_ms);
    let throughput = if med > 0.0 { protocol.batch as f64 * 1000.0 / med } else { f64::INFINITY };
    let timer_warning = {
        let res_ns = clock.resolution_ns() as f64;
        med > 0.0 && res_ns > med * 1e6 * 0.01
    };
    Ok(BenchResult {
        model_id: model.id.clone(),
        raw_times_ms,
        median_latency_ms: med,
        iqr_ms: iqr,
        throughput_ips: throughput,
        device_label: device_label.to_string(),
        timer_warning,
        forwards_executed: forwards,
        output_checksum,
        protocol: protocol.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelativeReport {
    pub base_id: String,
    pub other_id: String,
    pub latency_ratio: f64,
    pub throughput_ratio: f64,
}

/// Ratio of `other` to `base`. Comparisons across different pinned thread
/// counts are refused unless forced.
pub fn relative_report(base: &BenchResult, other: &BenchResult, force: bool) -> Result<RelativeReport> {
    if base.protocol.threads != other.protocol.threads && !force {
        return Err(Error::Unsupported(format!(
            "refusing to compare across thread counts ({} vs {}); pass force to override",
            base.protocol.threads, other.protocol.threads
        )));
    }
    Ok(RelativeReport {
        base_id: base.model_id.clone(),
        other_id: other.model_id.clone(),
        latency_ratio: other.median_latency_ms / base.median_latency_ms,
        throughput_ratio: other.throughput_ips / base.throughput_ips,
    })
}

#[derive(Debug, Clone, Default)]
pub struct GridOverrides {
    pub channels: Option<Vec<usize>>,
    pub resolutions: Option<Vec<usize>>,
    pub depth: Option<usize>,
    pub scenarios: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub config_id: String,
    pub resolution: usize,
    pub batch: usize,
    pub macs: u64,
    pub params: u64,
    pub median_latency_ms: f64,
    pub iqr_ms: f64,
    pub throughput_ips: f64,
    /// This row relative to its baseline partner; baseline rows read 1.0.
    pub relative_latency: f64,
    pub relative_throughput: f64,
    pub relative_macs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentTable {
    pub experiment: String,
    pub device_label: String,
    pub protocol: BenchProtocol,
    pub rows: Vec<ExperimentRow>,
}

pub const EXPERIMENTS: [&str; 4] = ["grouping", "mbconv_sweep", "res_vs_chan", "attention"];

pub const MBCONV_GRID_CHANNELS: [usize; 6] = [16, 32, 64, 128, 256, 512];
pub const MBCONV_GRID_RESOLUTIONS: [usize; 6] = [7, 14, 28, 56, 112, 224];

/// Grid cells with channels 16..64 at resolutions 7..28 are omitted from the
/// MBConv sweep, matching the published figure.
pub fn mbconv_cell_omitted(ch: usize, res: usize) -> bool {
    (16..=64).contains(&ch) && (7..=28).contains(&res)
}

struct MeasuredConfig {
    config_id: String,
    resolution: usize,
    macs: u64,
    params: u64,
    result: BenchResult,
}

fn run_config(
    model: &ModelGraph,
    config_id: &str,
    protocol: &BenchProtocol,
    clock: &mut dyn Clock,
    device_label: &str,
    policy: CostPolicy,
) -> Result<MeasuredConfig> {
    let report = analyze(model, policy)?;
    let proto = BenchProtocol { resolution: model.input_res, ..protocol.clone() };
    let result = measure(model, &proto, clock, device_label)?;
    Ok(MeasuredConfig {
        config_id: config_id.to_string(),
        resolution: model.input_res,
        macs: report.total_macs,
        params: report.total_params,
        result,
    })
}

fn paired_rows(base: MeasuredConfig, other: MeasuredConfig, batch: usize) -> Vec<ExperimentRow> {
    let base_row = ExperimentRow {
        config_id: base.config_id,
        resolution: base.resolution,
        batch,
        macs: base.macs,
        params: base.params,
        median_latency_ms: base.result.median_latency_ms,
        iqr_ms: base.result.iqr_ms,
        throughput_ips: base.result.throughput_ips,
        relative_latency: 1.0,
        relative_throughput: 1.0,
        relative_macs: 1.0,
    };
    let other_row = ExperimentRow {
        config_id: other.config_id,
        resolution: other.resolution,
        batch,
        macs: other.macs,
        params: other.params,
        median_latency_ms: other.result.median_latency_ms,
        iqr_ms: other.result.iqr_ms,
        throughput_ips: other.result.throughput_ips,
        relative_latency: other.result.median_latency_ms / base_row.median_latency_ms,
        relative_throughput: other.result.throughput_ips / base_row.throughput_ips,
        relative_macs: other.macs as f64 / base_row.macs as f64,
    };
    vec![base_row, other_row]
}

/// Run one of the four hardware-efficiency experiment grids: build each toy
/// configuration, analyze its exact cost, time it under the protocol, and
/// emit absolute plus relative columns. Grid overrides shrink the grids for
/// constrained hosts; the full defaults mirror the published tables.
pub fn run_experiment(
    name: &str,
    overrides: &GridOverrides,
    protocol: &BenchProtocol,
    clock: &mut dyn Clock,
    device_label: &str,
    policy: CostPolicy,
) -> Result<ExperimentTable> {
    let seed = protocol.seed;
    let mut rows = Vec::new();
    match name {
        "grouping" => {
            let gids = overrides.scenarios.clone().unwrap_or_else(|| vec![1, 2, 3]);
            for gid in gids {
                let base_id = format!("toy-grouping-{}", 2 * gid - 1);
                let dw_id = format!("toy-grouping-{}", 2 * gid);
                let base_model = zoo::build(&base_id, None, seed)?;
                let dw_model = zoo::build(&dw_id, None, seed)?;
                let base = run_config(&base_model, &base_id, protocol, clock, device_label, policy)?;
                let dw = run_config(&dw_model, &dw_id, protocol, clock, device_label, policy)?;
                rows.extend(paired_rows(base, dw, protocol.batch));
            }
        }
        "mbconv_sweep" => {
            let channels = overrides.channels.clone().unwrap_or_else(|| MBCONV_GRID_CHANNELS.to_vec());
            let resolutions =
                overrides.resolutions.clone().unwrap_or_else(|| MBCONV_GRID_RESOLUTIONS.to_vec());
            let depth = overrides.depth.unwrap_or(1);
            for &ch in &channels {
                for &res in &resolutions {
                    if mbconv_cell_omitted(ch, res) {
                        continue;
                    }
                    let uid = format!("mbconv-{ch}c-{res}r-unfused");
                    let fid = format!("mbconv-{ch}c-{res}r-fused");
                    let unfused = zoo::build_mbconv_probe(&uid, ch, res, false, depth, seed)?;
                    let fused = zoo::build_mbconv_probe(&fid, ch, res, true, depth, seed)?;
                    let base = run_config(&unfused, &uid, protocol, clock, device_label, policy)?;
                    let top = run_config(&fused, &fid, protocol, clock, device_label, policy)?;
                    rows.extend(paired_rows(base, top, protocol.batch));
                }
            }
        }
        "res_vs_chan" => {
            let scenarios = overrides
                .scenarios
                .clone()
                .unwrap_or_else(|| (1..=zoo::CONV_SCENARIOS.len()).collect());
            let depth = overrides.depth.unwrap_or(zoo::CONV_STACK_DEPTH);
            for s in scenarios {
                let lo_id = format!("toy-convstack-{s}-hichan");
                let hi_id = format!("toy-convstack-{s}-hires");
                let lo = zoo::build_convstack(&lo_id, s, false, depth, seed)?;
                let hi = zoo::build_convstack(&hi_id, s, true, depth, seed)?;
                let base = run_config(&lo, &lo_id, protocol, clock, device_label, policy)?;
                let top = run_config(&hi, &hi_id, protocol, clock, device_label, policy)?;
                rows.extend(paired_rows(base, top, protocol.batch));
            }
        }
        "attention" => {
            let resolutions = overrides
                .resolutions
                .clone()
                .unwrap_or_else(|| zoo::ATTN_STACK_RESOLUTIONS.to_vec());
            let depth = overrides.depth.unwrap_or(zoo::ATTN_STACK_DEPTH);
            for &res in &resolutions {
                let mut base: Option<MeasuredConfig> = None;
                for kind in
                    [zoo::AttnKind::Mhsa, zoo::AttnKind::Chcompr, zoo::AttnKind::ConvLow, zoo::AttnKind::ConvLowCh]
                {
                    let id = format!("attn-stack-{}-{res}", kind.key());
                    let model =
                        zoo::build_attn_stack(&id, kind, res, zoo::ATTN_STACK_DIM, depth, seed)?;
                    let cfg = run_config(&model, &id, protocol, clock, device_label, policy)?;
                    match &base {
                        None => {
                            rows.push(ExperimentRow {
                                config_id: cfg.config_id.clone(),
                                resolution: cfg.resolution,
                                batch: protocol.batch,
                                macs: cfg.macs,
                                params: cfg.params,
                                median_latency_ms: cfg.result.median_latency_ms,
                                iqr_ms: cfg.result.iqr_ms,
                                throughput_ips: cfg.result.throughput_ips,
                                relative_latency: 1.0,
                                relative_throughput: 1.0,
                                relative_macs: 1.0,
                            });
                            base = Some(cfg);
                        }
                        Some(b) => {
                            rows.push(ExperimentRow {
                                config_id: cfg.config_id.clone(),
                                resolution: cfg.resolution,
                                batch: protocol.batch,
                                macs: cfg.macs,
                                params: cfg.params,
                                median_latency_ms: cfg.result.median_latency_ms,
                                iqr_ms: cfg.result.iqr_ms,
                                throughput_ips: cfg.result.throughput_ips,
                                relative_latency: cfg.result.median_latency_ms
                                    / b.result.median_latency_ms,
                                relative_throughput: cfg.result.throughput_ips
                                    / b.result.throughput_ips,
                                relative_macs: cfg.macs as f64 / b.macs as f64,
                            });
                        }
                    }
                }
            }
        }
        other => return Err(Error::UnknownExperiment(other.to_string())),
    }
    Ok(ExperimentTable {
        experiment: name.to_string(),
        device_label: device_label.to_string(),
        protocol: protocol.clone(),
        rows,
    })
}

pub const CSV_HEADER: &str = "config_id,resolution,batch,macs,params,median_latency_ms,iqr_ms,throughput_ips,device_label,threads,seed";

#[allow(clippy::too_many_arguments)]
fn csv_row(
    config_id: &str,
    resolution: usize,
    batch: usize,
    macs: u64,
    params: u64,
    median_ms: f64,
    iqr_ms: f64,
    throughput: f64,
    device_label: &str,
    threads: usize,
    seed: u64,
) -> String {
    format!(
        "{config_id},{resolution},{batch},{macs},{params},{median_ms:.6},{iqr_ms:.6},{throughput:.3},{device_label},{threads},{seed}"
    )
}

/// Byte-stable CSV for an experiment table (schema columns plus the three
/// relative columns).
pub fn experiment_to_csv(t: &ExperimentTable) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push_str(",relative_latency,relative_throughput,relative_macs\n");
    for r in &t.rows {
        out.push_str(&csv_row(
            &r.config_id,
            r.resolution,
            r.batch,
            r.macs,
            r.params,
            r.median_latency_ms,
            r.iqr_ms,
            r.throughput_ips,
            &t.device_label,
            t.protocol.threads,
            t.protocol.seed,
        ));
        out.push_str(&format!(
            ",{:.6},{:.6},{:.6}\n",
            r.relative_latency, r.relative_throughput, r.relative_macs
        ));
    }
    out
}

/// Byte-stable single-row CSV for one measured model.
pub fn result_to_csv(r: &BenchResult, macs: u64, params: u64) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    out.push_str(&csv_row(
        &r.model_id,
        r.protocol.resolution,
        r.protocol.batch,
        macs,
        params,
        r.median_latency_ms,
        r.iqr_ms,
        r.throughput_ips,
        &r.device_label,
        r.protocol.threads,
        r.protocol.seed,
    ));
    out.push('\n');
    out
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidSpec(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}
