import type { DiffResponse, PairViewResponse, SearchResponse, SolutionsResponse } from "./types";

export class ApiError extends Error {
  status: number;
  code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface Api {
  getSolutions(): Promise<SolutionsResponse>;
  searchIdentities(platform: string, q: string, limit?: number): Promise<SearchResponse>;
  getPair(methodId: string, sourceId: string, k?: number): Promise<PairViewResponse>;
  getDiff(methodId: string, against: string, criterion?: string): Promise<DiffResponse>;
}

async function request<T>(fetchFn: FetchLike, url: string): Promise<T> {
  let resp: Response;
  try {
    resp = await fetchFn(url);
  } catch (err) {
    throw new ApiError(0, "unreachable", `service unreachable: ${String(err)}`);
  }
  const body = await resp.json().catch(() => null);
  if (!resp.ok) {
    const code = body && typeof body.code === "string" ? body.code : "error";
    const message = body && typeof body.message === "string" ? body.message : resp.statusText;
    throw new ApiError(resp.status, code, message);
  }
  return body as T;
}

export function createApi(base = "", fetchFn: FetchLike = (...args) => fetch(...args)): Api {
  const root = base.replace(/\/$/, "");
  return {
    getSolutions: () => request(fetchFn, `${root}/api/solutions`),
    searchIdentities: (platform, q, limit = 8) =>
      request(
        fetchFn,
        `${root}/api/identities/search?platform=${encodeURIComponent(platform)}&q=${encodeURIComponent(q)}&limit=${limit}`,
      ),
    getPair: (methodId, sourceId, k) =>
      request(
        fetchFn,
        `${root}/api/solutions/${encodeURIComponent(methodId)}/pairs/${encodeURIComponent(sourceId)}` +
          (k ? `?k=${k}` : ""),
      ),
    getDiff: (methodId, against, criterion) =>
      request(
        fetchFn,
        `${root}/api/solutions/${encodeURIComponent(methodId)}/diff?against=${encodeURIComponent(against)}` +
          (criterion ? `&criterion=${encodeURIComponent(criterion)}` : ""),
      ),
  };
}
