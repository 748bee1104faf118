// Browser entry point: the single mutable state cell, event wiring,
// and the fetch glue. Everything interesting lives in state.ts and
// render.ts; keep this file boring.

import { createSession, fetchSession, sendAnswer } from "./api.js";
import type { ApiResult, SessionJson, NewSessionBody } from "./api.js";
import {
  applySession,
  answerSendFailed,
  beginAnswer,
  checkCustomForm,
  currentQuestionNumber,
  initialState,
  loadingState,
  retryAnswer,
  startFailed,
} from "./state.js";
import type { UiState } from "./state.js";
import { renderApp } from "./render.js";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app element");
}

let state: UiState = initialState();

function dispatch(next: UiState): void {
  state = next;
  root!.innerHTML = renderApp(state);
}

function applyResult(result: ApiResult<SessionJson>): void {
  if (result.ok) {
    window.location.hash = result.value.id;
    dispatch(applySession(result.value));
  } else {
    window.location.hash = "";
    dispatch(startFailed(result.message));
  }
}

async function startGame(body: NewSessionBody): Promise<void> {
  dispatch(loadingState());
  applyResult(await createSession(body));
}

async function submitAnswer(answer: "yes" | "no"): Promise<void> {
  const next = beginAnswer(state, answer);
  if (next === null || state.sessionId === null) {
    return; // already in flight, or not playing
  }
  const questionNumber = currentQuestionNumber(next);
  dispatch(next);
  const result = await sendAnswer(state.sessionId, answer, questionNumber);
  if (result.ok) {
    dispatch(applySession(result.value));
  } else if (result.status === 0) {
    dispatch(answerSendFailed(state, result.message));
  } else if (result.status === 409) {
    // the server already moved past this question; resync
    await resume(state.sessionId);
  } else {
    dispatch(startFailed(result.message));
  }
}

async function retry(): Promise<void> {
  const answer = state.pendingAnswer;
  const next = retryAnswer(state);
  if (next === null || answer === null || state.sessionId === null) {
    return;
  }
  const questionNumber = currentQuestionNumber(next);
  dispatch(next);
  const result = await sendAnswer(state.sessionId, answer, questionNumber);
  if (result.ok) {
    dispatch(applySession(result.value));
  } else if (result.status === 0) {
    dispatch(answerSendFailed(state, result.message));
  } else {
    dispatch(startFailed(result.message));
  }
}

async function resume(id: string): Promise<void> {
  dispatch(loadingState());
  const result = await fetchSession(id);
  if (result.ok) {
    dispatch(applySession(result.value));
  } else {
    // expired or unknown id: drop the fragment and start fresh
    window.location.hash = "";
    dispatch(initialState());
  }
}

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const button = target.closest<HTMLElement>("[data-action]");
  if (button === null) {
    return;
  }
  const action = button.dataset.action;
  if (action === "preset") {
    void startGame({ preset: button.dataset.preset ?? "barbet" });
  } else if (action === "answer") {
    void submitAnswer(button.dataset.answer === "yes" ? "yes" : "no");
  } else if (action === "retry") {
    void retry();
  } else if (action === "again") {
    window.location.hash = "";
    dispatch(initialState());
  }
});

root.addEventListener("submit", (event) => {
  const form = event.target as HTMLFormElement;
  if (form.dataset.form !== "custom") {
    return;
  }
  event.preventDefault();
  const data = new FormData(form);
  const check = checkCustomForm(
    String(data.get("labels") ?? ""),
    String(data.get("probs") ?? ""),
  );
  if (!check.ok) {
    dispatch(startFailed(check.error)); // no request leaves the page
    return;
  }
  void startGame(check.form);
});

const fragment = window.location.hash.replace(/^#/, "");
if (fragment.length > 0) {
  void resume(fragment);
} else {
  dispatch(initialState());
}
