use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::chartab::{CharacterRow, CharacterTable, ClassDescriptor, ClassInfo, ClassLayout};
use crate::exact::Cyclotomic;
use crate::permgroup::{PermGroup, Permutation};

use super::partition::{factorial, partitions_of, CycleType, Partition};
use super::poly::SparsePoly;
use super::SymError;

pub const SN_TABLE_BOUND: usize = 8;

fn check_sizes(lambda: &Partition, t: &CycleType) -> Result<(), SymError> {
    if lambda.size() != t.size() {
        return Err(SymError::SizeMismatch(lambda.size(), t.size()));
    }
    Ok(())
}

/// `∏_m H_m^{i_m}` in `nvars` variables, pruned to exponents at most `bound`.
fn power_sum_product(t: &CycleType, nvars: usize, bound: &[u32]) -> SparsePoly {
    let mut p = SparsePoly::one(nvars);
    for (i, &k) in t.multiplicities().iter().enumerate() {
        let h = SparsePoly::power_sum(nvars, (i + 1) as u32);
        for _ in 0..k {
            p = p.mul_bounded(&h, bound);
        }
    }
    p
}

/// Character of the irreducible `V_λ` at the class of cycle type `t`: the
/// coefficient of `x^{λ+ρ}` in `Δ(x) ∏_m H_m(x)^{i_m}`, with
/// `N = max(p, 1)` variables for `p` parts.
pub fn frobenius_character(lambda: &Partition, t: &CycleType) -> Result<BigInt, SymError> {
    check_sizes(lambda, t)?;
    let n_vars = lambda.len().max(1);
    let rho: Vec<u32> = (0..n_vars).map(|j| (n_vars - 1 - j) as u32).collect();
    let target: Vec<u32> = (0..n_vars).map(|j| lambda.part(j) as u32 + rho[j]).collect();
    let p = power_sum_product(t, n_vars, &target);

    // Δ = Σ_σ sgn(σ) ∏_i x_i^{ρ_{σ(i)}}; collect Σ_σ sgn(σ)·P[target − σ(ρ)]
    let mut total = BigInt::zero();
    let mut used = vec![false; n_vars];
    let mut exps = vec![0u32; n_vars];
    fn walk(
        i: usize,
        rho: &[u32],
        target: &[u32],
        used: &mut [bool],
        exps: &mut [u32],
        inversions: usize,
        p: &SparsePoly,
        total: &mut BigInt,
    ) {
        let n = rho.len();
        if i == n {
            let c = p.coefficient(exps);
            if inversions % 2 == 0 {
                *total += c;
            } else {
                *total -= c;
            }
            return;
        }
        for s in 0..n {
            if used[s] || rho[s] > target[i] {
                continue;
            }
            // inversions contributed by placing s after the earlier choices
            let inv = used[s + 1..].iter().filter(|&&u| u).count();
            used[s] = true;
            exps[i] = target[i] - rho[s];
            walk(i + 1, rho, target, used, exps, inversions + inv, p, total);
            used[s] = false;
        }
    }
    walk(0, &rho, &target, &mut used, &mut exps, 0, &p, &mut total);
    Ok(total)
}

/// Character of the induced module `U_λ`: the coefficient of `x^λ` in
/// `∏_m H_m(x)^{i_m}`.
pub fn u_character(lambda: &Partition, t: &CycleType) -> Result<BigInt, SymError> {
    check_sizes(lambda, t)?;
    let n_vars = lambda.len().max(1);
    let target: Vec<u32> = (0..n_vars).map(|j| lambda.part(j) as u32).collect();
    Ok(power_sum_product(t, n_vars, &target).coefficient(&target))
}

/// `K_{μλ} = (χ_{U_λ}, χ_μ)`, the multiplicity of `V_μ` in `U_λ`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> Result<BigInt, SymError> {
    if mu.size() != lambda.size() {
        return Err(SymError::SizeMismatch(mu.size(), lambda.size()));
    }
    let n = lambda.size();
    let mut sum = BigInt::zero();
    for cls in partitions_of(n) {
        let t = CycleType::from_partition(&cls);
        sum += t.class_size() * u_character(lambda, &t)? * frobenius_character(mu, &t)?;
    }
    let (q, r) = sum.div_rem(&factorial(n));
    debug_assert!(r.is_zero(), "Kostka number must be integral");
    Ok(q)
}

/// A permutation of cycle type `p` whose cycles are consecutive runs of
/// points.
pub fn standard_representative(p: &Partition) -> Permutation {
    let n = p.size();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in p.parts() {
        for k in 0..len {
            images[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    Permutation::new(images).expect("valid cycle layout")
}

/// Classes of `S_n` indexed by cycle type in reverse lexicographic order.
pub fn sn_layout(n: usize) -> ClassLayout {
    let types = partitions_of(n);
    let index_of = |p: &Partition| types.iter().position(|q| q == p).expect("cycle type of n");
    let classes = types
        .iter()
        .map(|p| {
            let t = CycleType::from_partition(p);
            let rep = standard_representative(p);
            ClassInfo {
                label: rep.cycle_string(),
                size: t.class_size().to_u64().expect("class size fits"),
                element_order: rep.order(),
                rep: Some(rep.images().to_vec()),
                descriptor: Some(ClassDescriptor {
                    family: "cycle type".into(),
                    params: p.parts().iter().map(|&x| x as i64).collect(),
                }),
            }
        })
        .collect();
    let power2 = types.iter().map(|p| index_of(&CycleType::from_partition(p).square().to_partition())).collect();
    ClassLayout {
        name: format!("S{n}"),
        group_order: factorial(n).to_u64().expect("order fits"),
        classes,
        power2: Some(power2),
        inverse: Some((0..types.len()).collect()),
    }
}

/// The character table of `S_n` from the Frobenius formula, rows indexed by
/// partitions in reverse lexicographic order.
pub fn sn_table(n: usize) -> Result<CharacterTable, SymError> {
    if n > SN_TABLE_BOUND {
        return Err(SymError::BoundExceeded(n));
    }
    let layout = Arc::new(sn_layout(n));
    let types: Vec<CycleType> = partitions_of(n).iter().map(CycleType::from_partition).collect();
    let rows = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let values = types
                .iter()
                .map(|t| frobenius_character(&lambda, t).map(Cyclotomic::from_integer))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CharacterRow {
                name: lambda.to_string(),
                degree: lambda.hook_dim().to_u64().expect("degree fits"),
                values,
            })
        })
        .collect::<Result<Vec<_>, SymError>>()?;
    CharacterTable::new(layout, rows).map_err(|e| SymError::Table(e.to_string()))
}

/// [`sn_table`] expressed over the classes of a permutation group that
/// is the full symmetric group on its first `n` points, `n! = |G|`.
pub fn sn_table_on(group: &PermGroup) -> Result<CharacterTable, SymError> {
    let order = BigInt::from(group.order());
    let n = (1..=group.degree().max(1))
        .find(|&n| factorial(n) >= order)
        .filter(|&n| factorial(n) == order)
        .ok_or_else(|| SymError::Table(format!("{} has order {order}, not a factorial", group.name())))?;
    sn_table(n)?.transport(group).map_err(|e| SymError::Table(e.to_string()))
}
