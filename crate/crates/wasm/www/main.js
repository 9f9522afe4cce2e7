import init, { cyclotomicAnalysis, simulateCircuit, fourierHeatmap } from "./pkg/djh_wasm.js";

const $ = (id) => document.getElementById(id);

function drawWheel(canvas, n, points) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const cx = w / 2, cy = h / 2, r = Math.min(w, h) / 2 - 24;
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.arc(cx, cy, r, 0, 2 * Math.PI);
  ctx.stroke();
  for (let t = 0; t < n; t++) {
    const a = (2 * Math.PI * t) / n;
    ctx.fillStyle = "#ccc";
    ctx.beginPath();
    ctx.arc(cx + r * Math.cos(a), cy - r * Math.sin(a), 2, 0, 2 * Math.PI);
    ctx.fill();
  }
  const counts = new Map();
  for (const p of points) counts.set(p.exponent, (counts.get(p.exponent) || 0) + p.count);
  let sx = 0, sy = 0;
  for (const [t, c] of counts) {
    const a = (2 * Math.PI * t) / n;
    sx += c * Math.cos(a);
    sy += c * Math.sin(a);
    ctx.fillStyle = c > 0 ? "#2563eb" : "#dc2626";
    ctx.beginPath();
    ctx.arc(cx + r * Math.cos(a), cy - r * Math.sin(a), 3 + 2 * Math.sqrt(Math.abs(c)), 0, 2 * Math.PI);
    ctx.fill();
  }
  // the weighted sum of roots of unity; it sits at the centre iff balanced
  ctx.strokeStyle = "#16a34a";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(cx, cy);
  const total = [...counts.values()].reduce((a, b) => a + Math.abs(b), 0) || 1;
  ctx.lineTo(cx + (r * sx) / total, cy - (r * sy) / total);
  ctx.stroke();
  ctx.lineWidth = 1;
}

function runCyclo() {
  const n = Number($("cy-n").value);
  const out = JSON.parse(cyclotomicAnalysis($("cy-coeffs").value, n));
  $("cy-out").textContent = JSON.stringify(out, null, 1);
  if (!out.error) drawWheel($("cy-wheel"), n, out.points);
}

function runCircuit() {
  const out = JSON.parse(
    simulateCircuit($("ci-group").value, $("ci-image").value,
      Number($("ci-k").value), Number($("ci-i").value), Number($("ci-j").value)));
  if (out.error) {
    $("ci-prob").textContent = "error";
    $("ci-out").textContent = out.error;
    return;
  }
  const c = out.circuit;
  $("ci-prob").textContent = `${c.probability_identity.toFixed(9)} (${c.verdict})`;
  const rows = out.classification.rows
    .map((r) => `k=${r.k} i=${r.i}: ${r.verdict}`)
    .join("\n");
  $("ci-out").textContent = `h0 = ${c.h0_label}\n${rows}`;
}

function runQft() {
  const out = JSON.parse(fourierHeatmap($("qf-group").value));
  if (out.error) {
    $("qf-out").textContent = out.error;
    return;
  }
  const canvas = $("qf-canvas");
  const ctx = canvas.getContext("2d");
  const n = out.order;
  const cell = canvas.width / n;
  const maxMod = Math.max(...out.cells.flat().map((c) => c[0]));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  out.cells.forEach((row, g) =>
    row.forEach(([mod, arg], x) => {
      const hue = ((arg / (2 * Math.PI)) * 360 + 360) % 360;
      const light = 95 - 55 * (mod / maxMod);
      ctx.fillStyle = mod < 1e-12 ? "#fff" : `hsl(${hue}, 80%, ${light}%)`;
      ctx.fillRect(x * cell, g * cell, cell, cell);
    }));
  $("qf-out").textContent =
    `order ${n}\nirrep dimensions ${out.dims.join(", ")}\n` +
    `unitarity deviation ${out.unitarity.toExponential(2)}\nlabels ${out.labels.join(" ")}`;
}

await init();
$("cy-run").onclick = runCyclo;
$("ci-run").onclick = runCircuit;
$("qf-run").onclick = runQft;
runCyclo();
runCircuit();
runQft();
