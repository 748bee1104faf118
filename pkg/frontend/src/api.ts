// Thin client for the JSON API under /api. Field names mirror the
// server responses exactly; everything else in the app works off these
// types.

export type SessionVerdict = "active" | "won" | "inconsistent";

export interface TranscriptEntry {
  question: string;
  labels: string[];
  answer: "yes" | "no";
}

export interface SessionJson {
  id: string;
  state: SessionVerdict;
  question: string | null;
  question_number: number;
  question_count: number;
  won_object: string | null;
  final_answer: "yes" | null;
  transcript: TranscriptEntry[];
  expected_questions: number;
  entropy: number | null;
  entropy_plus_one: number | null;
}

export type NewSessionBody =
  | { preset: string }
  | { labels: string[]; probs: number[] };

export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; status: number; message: string };

// status 0 means the request never reached the server
async function request<T>(path: string, init?: RequestInit): Promise<ApiResult<T>> {
  let response: Response;
  try {
    response = await fetch(path, init);
  } catch {
    return { ok: false, status: 0, message: "could not reach the server" };
  }
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    let message = `request failed with status ${response.status}`;
    if (body !== null && typeof body === "object" && "error" in body) {
      message = String((body as { error: unknown }).error);
    }
    return { ok: false, status: response.status, message };
  }
  return { ok: true, value: body as T };
}

export function createSession(body: NewSessionBody): Promise<ApiResult<SessionJson>> {
  return request<SessionJson>("/api/sessions", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export function fetchSession(id: string): Promise<ApiResult<SessionJson>> {
  return request<SessionJson>(`/api/sessions/${encodeURIComponent(id)}`);
}

export function sendAnswer(
  id: string,
  answer: "yes" | "no",
  questionNumber: number,
): Promise<ApiResult<SessionJson>> {
  return request<SessionJson>(`/api/sessions/${encodeURIComponent(id)}/answers`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ answer, question_number: questionNumber }),
  });
}
