"""NumPy reference implementations of the hot kernels.

These are the fallback backend when the compiled extension is unavailable,
and the ground truth the compiled kernels are benchmarked and tested
against. All arrays are float64, C-contiguous.
"""

import numpy as np


def _patches(x_padded, k, stride, out_h, out_w):
    # strided view [out_h, out_w, C, k, k] over the padded input
    c = x_padded.shape[0]
    sc, sh, sw = x_padded.strides
    return np.lib.stride_tricks.as_strided(
        x_padded,
        shape=(out_h, out_w, c, k, k),
        strides=(sh * stride, sw * stride, sc, sh, sw),
        writeable=False,
    )


def conv2d_forward(x, w, stride, pad):
    """2D cross-correlation of x [C_in,H,W] with w [C_out,C_in,k,k]."""
    c_in, h, width = x.shape
    c_out, _, k, _ = w.shape
    xp = np.pad(x, ((0, 0), (pad, pad), (pad, pad)))
    out_h = (h + 2 * pad - k) // stride + 1
    out_w = (width + 2 * pad - k) // stride + 1
    patches = _patches(xp, k, stride, out_h, out_w)
    # [C_out, out_h, out_w]
    return np.tensordot(w, patches, axes=([1, 2, 3], [2, 3, 4]))


def conv2d_backward(x, w, grad_out, stride, pad):
    """Gradients of conv2d_forward w.r.t. input and kernel."""
    c_in, h, width = x.shape
    c_out, _, k, _ = w.shape
    out_h, out_w = grad_out.shape[1], grad_out.shape[2]
    xp = np.pad(x, ((0, 0), (pad, pad), (pad, pad)))

    patches = _patches(xp, k, stride, out_h, out_w)
    grad_w = np.tensordot(grad_out, patches, axes=([1, 2], [0, 1]))

    grad_xp = np.zeros_like(xp)
    for i in range(k):
        for j in range(k):
            # contribution of kernel tap (i, j) to each input position
            contrib = np.tensordot(w[:, :, i, j], grad_out, axes=([0], [0]))
            grad_xp[:, i : i + stride * out_h : stride,
                    j : j + stride * out_w : stride] += contrib
    grad_x = grad_xp[:, pad : pad + h, pad : pad + width]
    return np.ascontiguousarray(grad_x), grad_w


def _corner_terms(coords, h, w):
    u = coords[:, 0]
    v = coords[:, 1]
    u0 = np.floor(u)
    v0 = np.floor(v)
    du = u - u0
    dv = v - v0
    u0 = u0.astype(np.intp)
    v0 = v0.astype(np.intp)
    # (row index, col index, weight, d_weight/du, d_weight/dv) per corner
    terms = [
        (v0, u0, (1 - du) * (1 - dv), -(1 - dv), -(1 - du)),
        (v0, u0 + 1, du * (1 - dv), (1 - dv), -du),
        (v0 + 1, u0, (1 - du) * dv, -dv, (1 - du)),
        (v0 + 1, u0 + 1, du * dv, dv, du),
    ]
    out = []
    for rows, cols, wt, dwu, dwv in terms:
        valid = (rows >= 0) & (rows < h) & (cols >= 0) & (cols < w)
        out.append((np.clip(rows, 0, h - 1), np.clip(cols, 0, w - 1),
                    wt, dwu, dwv, valid))
    return out


def bilinear_forward(feature_map, coords):
    """Sample feature_map [C,H,W] at coords [N,2] given as (u, v) pixels.

    Neighbors outside the map contribute zero (zero-padding convention),
    so samples decay linearly to zero within one pixel of the border and
    are exactly zero beyond it.
    """
    c, h, w = feature_map.shape
    n = coords.shape[0]
    out = np.zeros((n, c))
    for rows, cols, wt, _, _, valid in _corner_terms(coords, h, w):
        out += (wt * valid)[:, None] * feature_map[:, rows, cols].T
    return out


def bilinear_backward(feature_map, coords, grad_out):
    """Gradients of bilinear_forward w.r.t. the map and the coordinates."""
    c, h, w = feature_map.shape
    grad_map = np.zeros_like(feature_map)
    grad_coords = np.zeros_like(coords)
    for rows, cols, wt, dwu, dwv, valid in _corner_terms(coords, h, w):
        pix = feature_map[:, rows, cols].T          # [N, C]
        dot = (grad_out * pix).sum(axis=1)          # [N]
        grad_coords[:, 0] += dot * dwu * valid
        grad_coords[:, 1] += dot * dwv * valid
        scatter = grad_out * (wt * valid)[:, None]  # [N, C]
        np.add.at(grad_map, (slice(None), rows[valid], cols[valid]),
                  scatter[valid].T)
    return grad_map, grad_coords
