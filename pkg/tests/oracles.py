"""Loop-naive reference implementations used as independent oracles.

Everything here is written directly from the documented formulas with plain
per-frame/per-joint loops, deliberately not sharing code with the package.
"""

from __future__ import annotations

import math

import numpy as np

# SMPL-24 indices, restated independently of the package tables
L_HIP, R_HIP = 1, 2
L_KNEE, R_KNEE = 4, 5
L_ANKLE, R_ANKLE = 7, 8
L_FOOT, R_FOOT = 10, 11
L_COLLAR, R_COLLAR = 13, 14
L_SHOULDER, R_SHOULDER = 16, 17
L_ELBOW, R_ELBOW = 18, 19
L_WRIST, R_WRIST = 20, 21

UPPER = [L_COLLAR, R_COLLAR, L_SHOULDER, R_SHOULDER, L_ELBOW, R_ELBOW, L_WRIST, R_WRIST]
LOWER = [L_HIP, R_HIP, L_KNEE, R_KNEE, L_ANKLE, R_ANKLE, L_FOOT, R_FOOT]
LIMBS = UPPER + [L_KNEE, R_KNEE, L_ANKLE, R_ANKLE, L_FOOT, R_FOOT]
PAIRS = [
    (L_ANKLE, R_ANKLE), (L_KNEE, R_KNEE), (L_HIP, R_HIP),
    (L_SHOULDER, R_SHOULDER), (L_ELBOW, R_ELBOW), (L_WRIST, R_WRIST),
]


def _sg_projection(window, order):
    """Hat matrix of a degree-``order`` least-squares fit over one window."""
    a = np.vander(np.arange(window, dtype=np.float64), order + 1, increasing=True)
    return a @ np.linalg.pinv(a)


def savgol_naive(y, window, order):
    """SG smoothing via explicit least-squares polynomial window fits.

    Interior samples evaluate the centered-window fit at its midpoint; the
    first/last half-windows evaluate the first/last full-window fit at the
    edge positions.
    """
    y = np.asarray(y, dtype=np.float64)
    n = len(y)
    half = window // 2
    hat = _sg_projection(window, order)
    out = np.empty(n)
    for t in range(half):
        out[t] = hat[t] @ y[:window]
    for t in range(half, n - half):
        out[t] = hat[half] @ y[t - half:t + half + 1]
    for t in range(n - half, n):
        out[t] = hat[t - (n - window)] @ y[n - window:]
    return out


def velocity_naive(pos, fps):
    f = len(pos)
    vel = np.zeros_like(pos)
    for t in range(f - 1):
        vel[t] = (pos[t + 1] - pos[t]) * fps
    vel[f - 1] = vel[f - 2]
    return vel


def filtered_velocity_naive(pos, fps, window=9, order=3):
    vel = velocity_naive(pos, fps)
    fvel = np.empty_like(vel)
    for j in range(vel.shape[1]):
        for a in range(3):
            fvel[:, j, a] = savgol_naive(vel[:, j, a], window, order)
    return vel, fvel


def acceleration_naive(fvel, fps):
    f = len(fvel)
    acc = np.zeros_like(fvel)
    for t in range(1, f - 1):
        acc[t] = (fvel[t + 1] - 2.0 * fvel[t] + fvel[t - 1]) * fps
    acc[0] = acc[1]
    acc[f - 1] = acc[f - 2]
    return acc


def entropy_naive(values, bins=10):
    values = list(np.asarray(values).ravel())
    lo, hi = min(values), max(values)
    if hi <= lo:
        return 0.0
    counts = [0] * bins
    width = (hi - lo) / bins
    for v in values:
        idx = int((v - lo) / width)
        if idx >= bins:
            idx = bins - 1
        counts[idx] += 1
    h = 0.0
    for c in counts:
        if c > 0:
            p = c / len(values)
            h -= p * math.log(p)
    return h


def yaw_naive(pos):
    """Facing yaw per frame from the inter-hip vector (left at +X faces +Z)."""
    f = len(pos)
    yaw = [0.0] * f
    prev = 0.0
    for t in range(f):
        hx = pos[t][L_HIP][0] - pos[t][R_HIP][0]
        hz = pos[t][L_HIP][2] - pos[t][R_HIP][2]
        dx, dz = -hz, hx
        if math.hypot(dx, dz) < 1e-9:
            yaw[t] = prev
        else:
            yaw[t] = math.atan2(dx, dz)
            prev = yaw[t]
    return yaw


def unwrap_naive(angles):
    out = [angles[0]]
    for a in angles[1:]:
        prev = out[-1]
        delta = a - prev
        while delta > math.pi:
            delta -= 2 * math.pi
        while delta < -math.pi:
            delta += 2 * math.pi
        out.append(prev + delta)
    return out


def c1_naive(pos, fps, contacts, a1=1.5, a2=0.05, a3=15.0, bins=10):
    f = len(pos)
    vel = velocity_naive(pos, fps)
    speeds = []
    mean_speed = 0.0
    for t in range(f):
        sl = math.sqrt(sum(vel[t][L_FOOT] ** 2))
        sr = math.sqrt(sum(vel[t][R_FOOT] ** 2))
        mean_speed += sl + sr
        speeds.extend([sl, sr])
    mean_speed /= f
    ent = entropy_naive(speeds, bins)
    rng = 0.0
    for foot in (L_FOOT, R_FOOT):
        xs = [pos[t][foot][0] for t in range(f)]
        zs = [pos[t][foot][2] for t in range(f)]
        rng = max(rng, math.hypot(max(xs) - min(xs), max(zs) - min(zs)))
    transitions = 0
    for t in range(1, f):
        if any(contacts[t][k] != contacts[t - 1][k] for k in range(4)):
            transitions += 1
    return mean_speed + a1 * ent + a2 * rng + a3 * transitions / f


def c2_naive(pos, fps, beta=0.005, window=9, order=3):
    f = len(pos)
    vel, fvel = filtered_velocity_naive(pos, fps, window, order)
    acc = acceleration_naive(fvel, fps)
    total = 0.0
    for j in LIMBS:
        speeds = [math.sqrt(sum(vel[t][j] ** 2)) for t in range(f)]
        mean = sum(speeds) / f
        sigma = math.sqrt(sum((s - mean) ** 2 for s in speeds) / f)
        if sigma > 1e-9:
            total += sum(s / sigma for s in speeds)
    term1 = total / f
    mags = sorted(
        math.sqrt(sum(acc[t][j] ** 2)) for t in range(1, f - 1) for j in LIMBS
    )
    n = len(mags)
    median = mags[n // 2] if n % 2 else (mags[n // 2 - 1] + mags[n // 2]) / 2
    return term1 + beta * median


def c3_naive(pos, fps, g1=0.3, g2=1.0, g3=0.5, window=9, order=3):
    yaw = unwrap_naive(yaw_naive(pos))
    n = len(yaw)
    w = window if n >= window else (n if n % 2 else n - 1)
    smooth = savgol_naive(yaw, w, order) if w > order else np.asarray(yaw)
    total = abs(yaw[-1] - yaw[0]) % (2 * math.pi)
    dyaw = [smooth[t + 1] - smooth[t] for t in range(n - 1)]
    d2 = [dyaw[t + 1] - dyaw[t] for t in range(len(dyaw) - 1)]
    term2 = sum(abs(d) for d in dyaw) / len(dyaw)
    term3 = sum(abs(d) for d in d2) / len(d2) if d2 else 0.0
    return g1 * total / math.pi + g2 * term2 + g3 * term3


def c4_naive(pos, fps, delta=0.01):
    f = len(pos)
    vel = velocity_naive(pos, fps)
    iu, il = [], []
    for t in range(f):
        iu.append(sum(math.sqrt(sum(vel[t][j] ** 2)) for j in UPPER) / len(UPPER))
        il.append(sum(math.sqrt(sum(vel[t][j] ** 2)) for j in LOWER) / len(LOWER))
    if min(sum(iu) / f, sum(il) / f) <= delta:
        return 0.0
    diff = [a - b for a, b in zip(iu, il)]
    mean = sum(diff) / f
    return sum((d - mean) ** 2 for d in diff) / f


def c5_naive(pos, fps, lam=0.5, delta=0.01, eps=1e-6, window=9, order=3):
    f = len(pos)
    vel, fvel = filtered_velocity_naive(pos, fps, window, order)
    yaw = yaw_naive(pos)

    def local(t, j):
        px = pos[t][j][0] - pos[t][0][0]
        py = pos[t][j][1] - pos[t][0][1]
        pz = pos[t][j][2] - pos[t][0][2]
        c, s = math.cos(-yaw[t]), math.sin(-yaw[t])
        return (c * px + s * pz, py, -s * px + c * pz)

    weights = []
    for jl, jr in PAIRS:
        m = sum(
            (math.sqrt(sum(fvel[t][jl] ** 2)) + math.sqrt(sum(fvel[t][jr] ** 2))) / 2
            for t in range(f)
        ) / f
        weights.append(1.0 / (m + eps))
    wsum = sum(weights)
    weights = [w / wsum for w in weights]

    a_total = 0.0
    for t in range(f):
        a_t = 0.0
        for w, (jl, jr) in zip(weights, PAIRS):
            sv = abs(
                math.sqrt(sum(vel[t][jl] ** 2)) - math.sqrt(sum(vel[t][jr] ** 2))
            )
            ll = local(t, jl)
            lr = local(t, jr)
            mirrored = (-lr[0], lr[1], lr[2])
            sp = math.sqrt(sum((a - b) ** 2 for a, b in zip(ll, mirrored)))
            a_t += w * (sv + 0.5 * sp)
        a_total += a_t
    a_mean = a_total / f

    v_l = sum(math.sqrt(sum(fvel[t][jl] ** 2)) for t in range(f) for jl, _ in PAIRS)
    v_r = sum(math.sqrt(sum(fvel[t][jr] ** 2)) for t in range(f) for _, jr in PAIRS)
    penalty = 1.0 + lam * (min(v_l, v_r) / (max(v_l, v_r) + eps) < delta)
    return a_mean * penalty


def merge_fixed_point(trends, alpha):
    """O(n^2) repeated pairwise merging until no pair qualifies.

    ``trends`` is a list of (joint, s, e, (vx, vy, vz)); a pair qualifies
    when it shares a joint and its span overlap ratio reaches ``alpha``.
    The earliest qualifying pair in start order merges first (span union,
    direction sum) and scanning restarts. Returns a sorted list in the
    same shape.
    """
    out = []
    joints = sorted({t[0] for t in trends})
    for joint in joints:
        items = [[j, s, e, list(v)] for j, s, e, v in trends if j == joint]
        changed = True
        while changed:
            changed = False
            items.sort(key=lambda it: (it[1], it[2]))
            for k in range(len(items)):
                for i in range(k):
                    a, b = items[i], items[k]
                    inter = min(a[2], b[2]) - max(a[1], b[1])
                    if inter <= 0:
                        continue
                    if inter / min(a[2] - a[1], b[2] - b[1]) >= alpha:
                        merged = [
                            joint,
                            min(a[1], b[1]),
                            max(a[2], b[2]),
                            [x + y for x, y in zip(a[3], b[3])],
                        ]
                        items = [
                            it for n_, it in enumerate(items) if n_ not in (i, k)
                        ]
                        items.append(merged)
                        changed = True
                        break
                if changed:
                    break
        out.extend(items)
    return sorted(
        (j, s, e, tuple(v)) for j, s, e, v in out if any(v)
    )


def dtw_naive(dist):
    n, m = dist.shape
    acc = np.full((n, m), np.inf)
    acc[0, 0] = dist[0, 0]
    for j in range(1, m):
        acc[0, j] = acc[0, j - 1] + dist[0, j]
    for i in range(1, n):
        acc[i, 0] = acc[i - 1, 0] + dist[i, 0]
        for j in range(1, m):
            acc[i, j] = dist[i, j] + min(acc[i - 1, j], acc[i, j - 1], acc[i - 1, j - 1])
    return float(acc[n - 1, m - 1])


def diversity_naive(vectors):
    total, count = 0.0, 0
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            total += math.sqrt(sum((a - b) ** 2 for a, b in zip(vectors[i], vectors[j])))
            count += 1
    return total / count
