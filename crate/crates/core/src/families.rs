//! Standard combinatorial media, produced as medium files.
//!
//! Each family is described by coordinates whose L1 unit pairs are exactly
//! the transitions: hypercube bits, grid points, inversion bits of
//! permutations, initial-segment bits of weak orders and relation bits of
//! partial orders.

use crate::error::FamilyError;
use crate::io::{MediumFile, StateRecord};

pub const HYPERCUBE_CAP: usize = 10;
pub const PERMUTATION_CAP: usize = 7;
pub const WEAK_ORDER_CAP: usize = 5;
pub const PARTIAL_ORDER_CAP: usize = 5;
pub const GRID_STATE_CAP: usize = 10_000;

pub const FAMILIES: [&str; 5] = ["hypercube", "grid", "permutations", "weak-orders", "partial-orders"];

/// Generates `name` at `size`: a number, or `AxBx...` for grids.
pub fn generate_family(name: &str, size: &str) -> Result<MediumFile, FamilyError> {
    let number = || -> Result<usize, FamilyError> { size.trim().parse().map_err(|_| FamilyError::InvalidSize(size.into())) };
    let capped = |family: &'static str, n: usize, cap: usize| {
        if n > cap {
            Err(FamilyError::SizeCap { family, n, cap })
        } else {
            Ok(n)
        }
    };
    let mut file = match name {
        "hypercube" => hypercube(capped("hypercube", number()?, HYPERCUBE_CAP)?),
        "grid" => grid(&parse_sides(size)?)?,
        "permutations" => permutations(positive(capped("permutations", number()?, PERMUTATION_CAP)?, size)?),
        "weak-orders" => weak_orders(positive(capped("weak-orders", number()?, WEAK_ORDER_CAP)?, size)?),
        "partial-orders" => partial_orders(positive(capped("partial-orders", number()?, PARTIAL_ORDER_CAP)?, size)?),
        other => return Err(FamilyError::UnsupportedFamily(other.into())),
    };
    file.meta.insert("generator".into(), format!("{name} {}", size.trim()));
    Ok(file)
}

fn positive(n: usize, size: &str) -> Result<usize, FamilyError> {
    if n == 0 {
        Err(FamilyError::InvalidSize(size.into()))
    } else {
        Ok(n)
    }
}

fn parse_sides(size: &str) -> Result<Vec<usize>, FamilyError> {
    let sides: Vec<usize> = size
        .split(['x', 'X', ','])
        .map(|s| s.trim().parse().map_err(|_| FamilyError::InvalidSize(size.into())))
        .collect::<Result<_, _>>()?;
    if sides.is_empty() || sides.iter().any(|&s| s < 2) {
        return Err(FamilyError::InvalidSize(size.into()));
    }
    Ok(sides)
}

fn records(states: Vec<(String, Vec<i64>)>) -> MediumFile {
    MediumFile::new(
        states
            .into_iter()
            .map(|(name, coords)| StateRecord { name, coords })
            .collect(),
    )
}

pub fn hypercube(d: usize) -> MediumFile {
    let states = (0..1usize << d)
        .map(|x| {
            let bits: Vec<i64> = (0..d).map(|i| ((x >> i) & 1) as i64).collect();
            let name = if d == 0 {
                "e".to_string()
            } else {
                bits.iter().map(|b| b.to_string()).collect()
            };
            (name, bits)
        })
        .collect();
    records(states)
}

pub fn grid(sides: &[usize]) -> Result<MediumFile, FamilyError> {
    let total = sides.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
    match total {
        Some(t) if t <= GRID_STATE_CAP => {}
        _ => {
            return Err(FamilyError::SizeCap {
                family: "grid",
                n: total.unwrap_or(usize::MAX),
                cap: GRID_STATE_CAP,
            })
        }
    }
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for &s in sides {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..s as i64).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    Ok(records(
        points
            .into_iter()
            .map(|p| (p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_"), p))
            .collect(),
    ))
}

/// All permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn item(i: usize) -> char {
    (b'a' + i as u8) as char
}

/// Permutations with one bit per item pair `i < j`, set when `j` precedes `i`.
pub fn permutations(n: usize) -> MediumFile {
    let states = all_permutations(n)
        .into_iter()
        .map(|p| {
            let mut rank = vec![0; n];
            for (r, &x) in p.iter().enumerate() {
                rank[x] = r;
            }
            let bits = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| i64::from(rank[j] < rank[i]))
                .collect();
            (p.iter().map(|&x| item(x)).collect(), bits)
        })
        .collect();
    records(states)
}

/// Ordered set partitions of `0..n`, as lists of block bitmasks.
fn ordered_partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        // Nonempty subsets of `rest`, in increasing mask order.
        let mut sub = rest;
        let mut subsets = Vec::new();
        while sub > 0 {
            subsets.push(sub);
            sub = (sub - 1) & rest;
        }
        subsets.reverse();
        for s in subsets {
            prefix.push(s);
            rec(rest & !s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec((1u32 << n) - 1, &mut Vec::new(), &mut out);
    out
}

/// Weak orders with one bit per nonempty proper subset `A`, set when `A` is
/// an initial segment (a union of leading blocks).
pub fn weak_orders(n: usize) -> MediumFile {
    let full = (1u32 << n) - 1;
    let subsets: Vec<u32> = (1..full).collect();
    let states = ordered_partitions(n)
        .into_iter()
        .map(|blocks| {
            let mut prefixes = Vec::new();
            let mut acc = 0;
            for &b in &blocks[..blocks.len() - 1] {
                acc |= b;
                prefixes.push(acc);
            }
            let bits = subsets.iter().map(|s| i64::from(prefixes.contains(s))).collect();
            let name = blocks
                .iter()
                .map(|&b| (0..n).filter(|i| b >> i & 1 == 1).map(item).collect::<String>())
                .collect::<Vec<_>>()
                .join("|");
            (name, bits)
        })
        .collect();
    records(states)
}

/// Partial orders on `0..n`, one bit per ordered pair `(i, j)`, `i != j`,
/// set when `i < j` in the order.
pub fn partial_orders(n: usize) -> MediumFile {
    // Grow posets one element at a time: the new element gets a down-set D
    // and an up-set U with every element of D below every element of U.
    let mut posets: Vec<Vec<Vec<bool>>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for less in &posets {
            for down in 0u32..1 << k {
                for up in 0u32..1 << k {
                    if down & up != 0 {
                        continue;
                    }
                    let inside = |m: u32, x: usize| m >> x & 1 == 1;
                    let closed = (0..k).all(|x| {
                        (0..k).all(|y| {
                            !less[x][y] || ((!inside(down, y) || inside(down, x)) && (!inside(up, x) || inside(up, y)))
                        })
                    });
                    let linked = (0..k).all(|x| {
                        (0..k).all(|y| !(inside(down, x) && inside(up, y)) || less[x][y])
                    });
                    if !closed || !linked {
                        continue;
                    }
                    let mut grown = vec![vec![false; k + 1]; k + 1];
                    for x in 0..k {
                        for y in 0..k {
                            grown[x][y] = less[x][y];
                        }
                        grown[x][k] = inside(down, x);
                        grown[k][x] = inside(up, x);
                    }
                    next.push(grown);
                }
            }
        }
        posets = next;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut states: Vec<(String, Vec<i64>)> = posets
        .into_iter()
        .map(|less| {
            let bits: Vec<i64> = pairs.iter().map(|&(i, j)| i64::from(less[i][j])).collect();
            let rel: Vec<String> = pairs
                .iter()
                .filter(|&&(i, j)| less[i][j])
                .map(|&(i, j)| format!("{}<{}", item(i), item(j)))
                .collect();
            let name = if rel.is_empty() { "-".to_string() } else { rel.join(",") };
            (name, bits)
        })
        .collect();
    states.sort_by(|a, b| a.1.iter().sum::<i64>().cmp(&b.1.iter().sum()).then(a.1.cmp(&b.1)));
    records(states)
}
