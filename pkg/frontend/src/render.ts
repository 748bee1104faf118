// Rendering is a pure function UiState -> HTML string; main.ts owns
// the only innerHTML assignment. Buttons carry data-action attributes
// that the event delegation in main.ts dispatches on.

import { currentQuestionNumber } from "./state.js";
import type { UiState, Scoreboard, HistoryEntry } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function fixed(value: number | null): string {
  return value === null ? "n/a" : value.toFixed(3);
}

function renderScoreboard(scoreboard: Scoreboard, questionCount: number): string {
  return `
  <dl class="scoreboard">
    <div><dt>entropy H</dt><dd>${fixed(scoreboard.entropy)}</dd></div>
    <div><dt>expected questions</dt><dd>${fixed(scoreboard.expectedQuestions)}</dd></div>
    <div><dt>H + 1</dt><dd>${fixed(scoreboard.entropyPlusOne)}</dd></div>
    <div><dt>questions so far</dt><dd>${questionCount}</dd></div>
  </dl>`;
}

function renderHistory(history: HistoryEntry[]): string {
  if (history.length === 0) {
    return "";
  }
  const items = history
    .map(
      (entry, i) =>
        `<li><span class="q">${i + 1}. ${escapeHtml(entry.question)}</span>` +
        ` <span class="a ${entry.answer}">${entry.answer}</span></li>`,
    )
    .join("");
  return `<ol class="history">${items}</ol>`;
}

function renderStart(formError: string | null): string {
  const errorLine =
    formError === null ? "" : `<p class="form-error">${escapeHtml(formError)}</p>`;
  return `
  <section class="start">
    <h1>Twenty Questions</h1>
    <p>Think of one of the objects; the computer asks yes/no questions
    and its last question is always answered yes.</p>
    <button data-action="preset" data-preset="barbet">Play the bar bet (4 objects)</button>
    <form data-form="custom">
      <h2>Or bring your own objects</h2>
      <label>Names, comma separated
        <input name="labels" placeholder="cat, dog, fish" autocomplete="off">
      </label>
      <label>Probabilities, comma separated
        <input name="probs" placeholder="0.5, 0.3, 0.2" autocomplete="off">
      </label>
      ${errorLine}
      <button type="submit">Start</button>
    </form>
  </section>`;
}

function renderPlaying(
  state: UiState,
  question: string,
  inFlight: boolean,
  notice: string | null,
): string {
  const number = currentQuestionNumber(state);
  const disabled = inFlight ? " disabled" : "";
  const noticeLine =
    notice === null
      ? ""
      : `<p class="notice">${escapeHtml(notice)}` +
        (state.pendingAnswer !== null
          ? ` <button data-action="retry">Retry ${state.pendingAnswer}</button>`
          : "") +
        `</p>`;
  return `
  <section class="playing">
    <p class="question-number">Question ${number}</p>
    <p class="question">${escapeHtml(question)}</p>
    <div class="answers">
      <button data-action="answer" data-answer="yes"${disabled}>Yes</button>
      <button data-action="answer" data-answer="no"${disabled}>No</button>
    </div>
    ${noticeLine}
    ${renderHistory(state.history)}
  </section>`;
}

function renderWon(state: UiState, object: string, questions: number): string {
  let comparison = "";
  if (state.scoreboard !== null && state.scoreboard.entropy !== null) {
    comparison =
      `<p class="comparison">This game took ${questions}; an average game needs ` +
      `${fixed(state.scoreboard.expectedQuestions)}, between the entropy floor ` +
      `${fixed(state.scoreboard.entropy)} and ceiling ${fixed(state.scoreboard.entropyPlusOne)}.</p>`;
  }
  return `
  <section class="won">
    <p class="banner">${escapeHtml(object)} in ${questions} questions. Final answer: Yes!</p>
    ${comparison}
    ${renderHistory(state.history)}
    <button data-action="again">Play again</button>
  </section>`;
}

function renderInconsistent(state: UiState): string {
  return `
  <section class="inconsistent">
    <p class="banner">Your answers rule out every object, so one of them
    must have been wrong. The questioner gives up.</p>
    ${renderHistory(state.history)}
    <button data-action="again">Play again</button>
  </section>`;
}

export function renderApp(state: UiState): string {
  const phase = state.phase;
  let body: string;
  switch (phase.kind) {
    case "start":
      body = renderStart(phase.formError);
      break;
    case "loading":
      body = `<p class="loading">Setting up the game.</p>`;
      break;
    case "playing":
      body = renderPlaying(state, phase.question, phase.inFlight, phase.notice);
      break;
    case "won":
      body = renderWon(state, phase.object, phase.questions);
      break;
    case "inconsistent":
      body = renderInconsistent(state);
      break;
    case "broken":
      body =
        `<p class="broken">Something is off: ${escapeHtml(phase.message)}. ` +
        `Reload the page to start over.</p>`;
      break;
  }
  const scoreboard =
    state.scoreboard === null ? "" : renderScoreboard(state.scoreboard, state.history.length);
  return `<main>${body}${scoreboard}</main>`;
}
