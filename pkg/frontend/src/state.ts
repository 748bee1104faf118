// All UI state lives in one immutable value; the functions here are
// pure transitions so the whole flow is testable without a DOM.

import type { SessionJson } from "./api.js";

export interface HistoryEntry {
  question: string;
  answer: "yes" | "no";
}

export interface Scoreboard {
  expectedQuestions: number;
  entropy: number | null;
  entropyPlusOne: number | null;
}

export type Phase =
  | { kind: "start"; formError: string | null }
  | { kind: "loading" }
  | { kind: "playing"; question: string; inFlight: boolean; notice: string | null }
  | { kind: "won"; object: string; questions: number }
  | { kind: "inconsistent" }
  | { kind: "broken"; message: string };

export interface UiState {
  sessionId: string | null;
  phase: Phase;
  history: HistoryEntry[];
  scoreboard: Scoreboard | null;
  // answer we tried to send but the network dropped; kept for retry
  pendingAnswer: "yes" | "no" | null;
}

export function initialState(): UiState {
  return {
    sessionId: null,
    phase: { kind: "start", formError: null },
    history: [],
    scoreboard: null,
    pendingAnswer: null,
  };
}

export function loadingState(): UiState {
  return { ...initialState(), phase: { kind: "loading" } };
}

// question number the next answer belongs to; matches the server's
// question_number while the game is running
export function currentQuestionNumber(state: UiState): number {
  return state.history.length + 1;
}

/** Fold a session response from the server into fresh UI state. */
export function applySession(session: SessionJson): UiState {
  const history: HistoryEntry[] = session.transcript.map((entry) => ({
    question: entry.question,
    answer: entry.answer,
  }));
  const scoreboard: Scoreboard = {
    expectedQuestions: session.expected_questions,
    entropy: session.entropy,
    entropyPlusOne: session.entropy_plus_one,
  };
  const base: UiState = {
    sessionId: session.id,
    phase: { kind: "loading" },
    history,
    scoreboard,
    pendingAnswer: null,
  };
  if (session.state === "active") {
    if (session.question === null) {
      return broken(base, "server sent an active game with no question");
    }
    return {
      ...base,
      phase: { kind: "playing", question: session.question, inFlight: false, notice: null },
    };
  }
  if (session.state === "won") {
    // a won game must end on a recorded "yes"; refuse to show it otherwise
    const last = history[history.length - 1];
    if (session.final_answer !== "yes" || last === undefined || last.answer !== "yes") {
      return broken(base, "server reported a win whose last answer was not yes");
    }
    if (session.won_object === null) {
      return broken(base, "server reported a win without naming the object");
    }
    return {
      ...base,
      phase: { kind: "won", object: session.won_object, questions: session.question_count },
    };
  }
  return { ...base, phase: { kind: "inconsistent" } };
}

function broken(state: UiState, message: string): UiState {
  return { ...state, phase: { kind: "broken", message }, pendingAnswer: null };
}

/**
 * Mark an answer as in flight. Returns null when the click must be
 * ignored: not playing, or a request is already out (double click).
 */
export function beginAnswer(state: UiState, answer: "yes" | "no"): UiState | null {
  if (state.phase.kind !== "playing" || state.phase.inFlight) {
    return null;
  }
  return {
    ...state,
    phase: { ...state.phase, inFlight: true, notice: null },
    pendingAnswer: answer,
  };
}

/** The send failed before reaching the game; keep the answer for retry. */
export function answerSendFailed(state: UiState, message: string): UiState {
  if (state.phase.kind !== "playing") {
    return state;
  }
  return {
    ...state,
    phase: { ...state.phase, inFlight: false, notice: message },
  };
}

/** Put the kept answer back in flight. Null when there is nothing to retry. */
export function retryAnswer(state: UiState): UiState | null {
  if (state.phase.kind !== "playing" || state.phase.inFlight || state.pendingAnswer === null) {
    return null;
  }
  return { ...state, phase: { ...state.phase, inFlight: true, notice: null } };
}

export function startFailed(message: string): UiState {
  return { ...initialState(), phase: { kind: "start", formError: message } };
}

export interface CustomForm {
  labels: string[];
  probs: number[];
}

export type FormCheck = { ok: true; form: CustomForm } | { ok: false; error: string };

// mirrors the server's validation closely enough to catch typos before
// any request goes out; the server stays the authority
export function checkCustomForm(labelsText: string, probsText: string): FormCheck {
  const labels = labelsText
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
  const probParts = probsText
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
  if (labels.length === 0) {
    return { ok: false, error: "enter at least one object name" };
  }
  if (labels.length !== probParts.length) {
    return { ok: false, error: `${labels.length} names but ${probParts.length} probabilities` };
  }
  const seen = new Set<string>();
  for (const label of labels) {
    if (seen.has(label)) {
      return { ok: false, error: `duplicate name: ${label}` };
    }
    seen.add(label);
  }
  const probs: number[] = [];
  for (const part of probParts) {
    const value = Number(part);
    if (!Number.isFinite(value) || value <= 0) {
      return { ok: false, error: `probabilities must be positive numbers, got ${part}` };
    }
    probs.push(value);
  }
  const total = probs.reduce((a, b) => a + b, 0);
  if (Math.abs(total - 1) > 1e-6) {
    return { ok: false, error: `probabilities sum to ${total}, not 1` };
  }
  return { ok: true, form: { labels, probs } };
}
