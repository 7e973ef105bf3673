import init, { complementGraph, distancesFrom, groupSummary } from "./pkg/powergraph_web.js";

const canvas = document.getElementById("view");
const ctx = canvas.getContext("2d");
const info = document.getElementById("info");
const form = document.getElementById("controls");
const exprInput = document.getElementById("expr");

const DISTANCE_COLOURS = ["#000", "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e"];

let current = null;
let points = [];

function kind() {
  return form.querySelector("input[name=kind]:checked").value;
}

function layout(count) {
  const r = canvas.width / 2 - 30;
  const c = canvas.width / 2;
  return Array.from({ length: count }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(count, 1) - Math.PI / 2;
    return { x: c + r * Math.cos(a), y: c + r * Math.sin(a) };
  });
}

// Vertex hue follows element order, so elements of equal order share a colour.
function orderColour(order) {
  return `hsl(${(order * 47) % 360} 65% 50%)`;
}

function draw(distances) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!current) return;
  ctx.strokeStyle = "rgba(0,0,0,0.15)";
  ctx.lineWidth = 1;
  ctx.beginPath();
  for (const [u, v] of current.edges) {
    ctx.moveTo(points[u].x, points[u].y);
    ctx.lineTo(points[v].x, points[v].y);
  }
  ctx.stroke();

  const far = current.farthest ?? [];
  current.vertices.forEach((vx, i) => {
    const p = points[i];
    let fill = orderColour(vx.order);
    if (distances) {
      const d = distances[i];
      fill = d === null ? "#ccc" : DISTANCE_COLOURS[Math.min(d, DISTANCE_COLOURS.length - 1)];
    }
    ctx.beginPath();
    ctx.arc(p.x, p.y, 7, 0, 2 * Math.PI);
    ctx.fillStyle = fill;
    ctx.fill();
    if (far.includes(i)) {
      ctx.lineWidth = 3;
      ctx.strokeStyle = "#d00";
      ctx.stroke();
    }
    ctx.fillStyle = "#333";
    ctx.fillText(String(vx.element), p.x + 9, p.y - 9);
  });
}

function describe(view, summary) {
  const pred = view.prediction;
  const lines = [
    `${view.name}  (order ${view.order})`,
    `graph: complement of the ${view.kind} graph, star part`,
    `vertices drawn: ${view.vertices.length}, edges: ${view.edges.length}`,
    `isolated elements: ${view.isolated.join(" ")}`,
    `components: ${view.components}`,
    `measured diameter: ${view.diameter ?? "n/a"}`,
    `predicted diameter: ${pred ? `${pred.value} (${pred.reason})` : "n/a"}`,
    "",
    `maximal cyclic subgroups: ${summary.maximal_cyclic}`,
    `|Cyc(G)|: ${summary.cyc}`,
    `nilpotent: ${summary.nilpotent}   Psi: ${summary.psi}   Phi: ${summary.phi}`,
    `element orders: ${summary.orders.map(([o, c]) => `${o}×${c}`).join(", ")}`,
  ];
  return lines.join("\n");
}

function render() {
  try {
    const expr = exprInput.value;
    current = JSON.parse(complementGraph(expr, kind()));
    const summary = JSON.parse(groupSummary(expr));
    points = layout(current.vertices.length);
    info.className = "";
    info.textContent = describe(current, summary);
    draw(null);
  } catch (e) {
    current = null;
    draw(null);
    info.className = "error";
    info.textContent = String(e);
  }
}

canvas.addEventListener("click", (ev) => {
  if (!current) return;
  const rect = canvas.getBoundingClientRect();
  const x = ev.clientX - rect.left;
  const y = ev.clientY - rect.top;
  const hit = points.findIndex((p) => (p.x - x) ** 2 + (p.y - y) ** 2 <= 100);
  if (hit < 0) {
    draw(null);
    return;
  }
  draw(JSON.parse(distancesFrom(exprInput.value, kind(), hit)));
});

form.addEventListener("submit", (ev) => {
  ev.preventDefault();
  render();
});
form.addEventListener("change", render);

await init();
render();
