use super::{RingSpec, ShiftPolynomial};
use crate::ca1d::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::{Symbol, SymbolSource, Word};

fn require_field(ring: &RingSpec) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{ring} is not a field")))
    }
}

/// Reduces `rows` (with optional right-hand sides) to row echelon form in place.
/// Returns the pivot column of each nonzero row.
fn eliminate(ring: &RingSpec, rows: &mut [Vec<Symbol>], rhs: &mut [Symbol]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, found);
        rhs.swap(r, found);
        let inv = ring.inv(rows[r][col]).expect("nonzero field element");
        for v in rows[r].iter_mut() {
            *v = ring.mul(*v, inv);
        }
        rhs[r] = ring.mul(rhs[r], inv);
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for j in 0..cols {
                    let t = ring.mul(factor, rows[r][j]);
                    rows[i][j] = ring.sub(rows[i][j], t);
                }
                let t = ring.mul(factor, rhs[r]);
                rhs[i] = ring.sub(rhs[i], t);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a matrix over a field.
pub fn rank(ring: &RingSpec, rows: &[Vec<Symbol>]) -> Result<usize> {
    require_field(ring)?;
    let mut rows = rows.to_vec();
    let mut rhs = vec![0; rows.len()];
    Ok(eliminate(ring, &mut rows, &mut rhs).len())
}

/// One solution of `rows · x = rhs` with free variables set to 0, or `None` if inconsistent.
pub fn solve(ring: &RingSpec, rows: &[Vec<Symbol>], rhs: &[Symbol]) -> Result<Option<Vec<Symbol>>> {
    require_field(ring)?;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rows = rows.to_vec();
    let mut rhs = rhs.to_vec();
    let pivots = eliminate(ring, &mut rows, &mut rhs);
    if rhs[pivots.len()..].iter().any(|&v| v != 0) {
        return Ok(None);
    }
    let mut x = vec![0; cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rhs[r];
    }
    Ok(Some(x))
}

fn windows(source: &impl SymbolSource, n: usize, k: usize) -> Option<Vec<Vec<Symbol>>> {
    (0..n).map(|i| source.window(i, k)).collect()
}

/// Minimal `k <= k_max` making the `n` windows `a_{[i,i+k)}`, `i < n`, linearly independent.
pub fn window_independence(source: &impl SymbolSource, n: usize, k_max: usize, ring: &RingSpec) -> Result<Option<usize>> {
    require_field(ring)?;
    source.alphabet().ensure_same(ring.alphabet())?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    // n vectors in a k-dimensional space need k >= n
    for k in n..=k_max {
        let Some(rows) = windows(source, n, k) else { return Ok(None) };
        if rank(ring, &rows)? == n {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// A linear map `τ` with `τ(source)_{[0,|target|)} = target`, from the coefficient vector
/// solving `window_i · c = target_i`.
pub fn construct_linear_hitting(source: &impl SymbolSource, target: &Word, ring: &RingSpec, k_max: usize) -> Result<BlockMap> {
    source.alphabet().ensure_same(target.alphabet())?;
    let n = target.len();
    if target.symbols().iter().all(|&x| x == 0) {
        return Ok(ShiftPolynomial::zero(ring.clone()).to_blockmap());
    }
    let k = window_independence(source, n, k_max, ring)?.ok_or(Error::WindowsDependent)?;
    let rows = windows(source, n, k).expect("independence check read these windows");
    let coeffs = solve(ring, &rows, target.symbols())?.expect("independent rows are always solvable");
    Ok(ShiftPolynomial::new(ring.clone(), coeffs)?.to_blockmap())
}
