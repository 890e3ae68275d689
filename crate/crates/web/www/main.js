import init, { Family } from "./pkg/qpol_web.js";

const $ = (id) => document.getElementById(id);
const SWEEP_COLUMNS = 5;

function readFamily() {
  const kind = document.querySelector("input[name=family]:checked").value;
  const p = Number($("p").value);
  if (kind === "superposition") {
    return Family.superposition(Number($("n1").value), Number($("n2").value), p);
  }
  return Family.mixture(p, Number($("alpha").value), Number($("beta").value), Number($("gamma").value));
}

// viridis-like ramp, t in [0, 1]
function colour(t) {
  const stops = [[68, 1, 84], [59, 82, 139], [33, 145, 140], [94, 201, 98], [253, 231, 37]];
  const x = Math.min(Math.max(t, 0), 1) * (stops.length - 1);
  const i = Math.min(Math.floor(x), stops.length - 2);
  const f = x - i;
  return stops[i].map((c, k) => Math.round(c + f * (stops[i + 1][k] - c)));
}

function drawSurface(q, grid, saddle) {
  const canvas = $("surface");
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(grid, grid);
  let lo = Infinity, hi = -Infinity;
  for (const v of q) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
  for (let i = 0; i < grid; i++) {       // s index, left to right
    for (let j = 0; j < grid; j++) {     // pi1 index, bottom to top
      const [r, g, b] = colour((q[i * grid + j] - lo) / (hi - lo || 1));
      const at = 4 * ((grid - 1 - j) * grid + i);
      img.data.set([r, g, b, 255], at);
    }
  }
  const tmp = new OffscreenCanvas(grid, grid);
  tmp.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(tmp, 0, 0, canvas.width, canvas.height);

  const x = saddle[0] * canvas.width;
  const y = (1 - saddle[1]) * canvas.height;
  ctx.strokeStyle = "#fff";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(x - 8, y); ctx.lineTo(x + 8, y);
  ctx.moveTo(x, y - 8); ctx.lineTo(x, y + 8);
  ctx.stroke();
}

function drawSweep(rows, p) {
  const canvas = $("sweep");
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 40;
  const n = rows.length / SWEEP_COLUMNS;
  let hi = 0;
  for (let k = 0; k < n; k++) hi = Math.max(hi, rows[k * SWEEP_COLUMNS + 1], rows[k * SWEEP_COLUMNS + 2]);
  hi = Math.max(hi * 1.05, 1e-3);
  const px = (v) => pad + v * (w - 2 * pad);
  const py = (v) => h - pad - (v / hi) * (h - 2 * pad);

  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.lineWidth = 1;
  ctx.setLineDash([]);
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.fillText("0", pad - 4, h - pad + 14);
  ctx.fillText("p = 1", w - pad - 16, h - pad + 14);
  ctx.fillText(hi.toFixed(3), 4, pad + 4);

  for (const [col, dash] of [[1, []], [2, [6, 4]]]) {
    ctx.strokeStyle = "#1f4e9c";
    ctx.lineWidth = 2;
    ctx.setLineDash(dash);
    ctx.beginPath();
    for (let k = 0; k < n; k++) {
      const x = px(rows[k * SWEEP_COLUMNS]), y = py(rows[k * SWEEP_COLUMNS + col]);
      k === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
    }
    ctx.stroke();
  }
  ctx.setLineDash([]);
  ctx.strokeStyle = "#c33";
  ctx.beginPath();
  ctx.moveTo(px(p), pad); ctx.lineTo(px(p), h - pad);
  ctx.stroke();
}

function showSaddle(v) {
  const f = (x) => x.toFixed(6);
  $("readout").textContent =
    `saddle   s = ${f(v[0])}   pi1 = ${f(v[1])}   Q = ${f(v[2])}` +
    (v[5] ? "   (boundary s = 0)" : "") +
    `\nP_C = ${f(v[3])}   P_B = ${f(v[4])}`;
}

let lastSweepKey = "";
let cachedSweep = null;

function update() {
  $("p-value").textContent = Number($("p").value).toFixed(3);
  const mixture = document.querySelector("input[name=family]:checked").value === "mixture";
  $("superposition-params").hidden = mixture;
  $("mixture-params").hidden = !mixture;
  let family;
  try {
    family = readFamily();
    const grid = Number($("grid").value);
    const points = Number($("points").value);
    const saddle = family.saddle();
    drawSurface(family.surface(grid), grid, saddle);
    // the sweep does not depend on p, so dragging p reuses it
    const key = [mixture, $("n1").value, $("n2").value, $("alpha").value, $("beta").value, $("gamma").value, points].join();
    if (key !== lastSweepKey) {
      cachedSweep = family.sweep(points);
      lastSweepKey = key;
    }
    drawSweep(cachedSweep, Number($("p").value));
    showSaddle(saddle);
    $("error").textContent = "";
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  } finally {
    family?.free();
  }
}

await init();
$("params").addEventListener("input", update);
update();
